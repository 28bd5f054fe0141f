#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jgpi/expr.hpp"
#include "jgpi/poly.hpp"

using namespace jgpi;

namespace {
JordanPoly P(const char* s) { return to_poly(parse_expression(s)); }

// tiny deterministic generator for property checks
struct Rng {
    uint64_t s = 0x2545f4914f6cdd1dull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

Monomial random_monomial(Rng& rng, int degree) {
    if (degree == 1) {
        int idx = rng.below(3) + 1;
        return rng.below(2) ? Monomial::var(VarName::odd(idx)) : Monomial::var(VarName::even(idx));
    }
    int l = 1 + rng.below(degree - 1);
    return Monomial::product(random_monomial(rng, l), random_monomial(rng, degree - l));
}

JordanPoly random_poly(Rng& rng, int maxdeg, int terms) {
    JordanPoly p;
    for (int i = 0; i < terms; ++i)
        p.add_term(random_monomial(rng, 1 + rng.below(maxdeg)), Rat(rng.below(7) - 3));
    return p;
}
}  // namespace

TEST_CASE("canonicalization orders children and absorbs units") {
    Monomial x1 = Monomial::var(VarName::placeholder(1));
    Monomial x2 = Monomial::var(VarName::placeholder(2));
    Monomial x3 = Monomial::var(VarName::placeholder(3));
    CHECK(Monomial::product(x2, x1) == Monomial::product(x1, x2));
    CHECK(Monomial::product(x3, Monomial::product(x2, x1)) ==
          Monomial::product(Monomial::product(x1, x2), x3));
    Monomial z1 = Monomial::var(VarName::odd(1));
    CHECK(Monomial::product(Monomial{}, z1) == z1);
    CHECK(Monomial::product(x1, x1).degree() == 2);
}

TEST_CASE("multiplication is commutative, bilinear, unital") {
    CHECK(P("z1*z2") == P("z2*z1"));
    CHECK(P("(y1+z1)*z1") == P("y1*z1 + z1*z1"));
    CHECK(P("1*(y1*z1)") == P("y1*z1"));
    Rng rng;
    for (int i = 0; i < 50; ++i) {
        JordanPoly p = random_poly(rng, 3, 3), q = random_poly(rng, 3, 3),
                   r = random_poly(rng, 2, 2);
        CHECK(p * q == q * p);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(JordanPoly::unit() * p == p);
    }
}

TEST_CASE("associator basics") {
    CHECK(associator(P("z1"), P("z2"), P("1")).is_zero());
    CHECK(associator(P("y1"), P("y1"), P("y1")).is_zero());
    JordanPoly a = associator(P("z1"), P("y1"), P("z2"));
    CHECK(a == P("(z1*y1)*z2 - z1*(y1*z2)"));
    CHECK(a.num_terms() == 2);
    // trilinearity, spot check
    CHECK(associator(P("z1+z2"), P("y1"), P("z3")) ==
          associator(P("z1"), P("y1"), P("z3")) + associator(P("z2"), P("y1"), P("z3")));
    // (a,b,c) + (c,b,a) = 0 in any commutative algebra
    Rng rng;
    for (int i = 0; i < 30; ++i) {
        JordanPoly p = random_poly(rng, 2, 2), q = random_poly(rng, 2, 2),
                   r = random_poly(rng, 2, 2);
        CHECK((associator(p, q, r) + associator(r, q, p)).is_zero());
    }
}

TEST_CASE("multihomogeneous components") {
    auto comps = multihomogeneous_components(P("y1*z1 + z1*z1"));
    CHECK(comps.size() == 2);
    CHECK(multihomogeneous_components(JordanPoly::zero()).empty());
    CHECK(multihomogeneous_components(P("y1*z1 - z1*y1 + y1*z1")).size() == 1);
    JordanPoly sum;
    for (auto& [d, c] : comps) sum += c;
    CHECK(sum == P("y1*z1 + z1*z1"));
}

TEST_CASE("shift substitution y -> y+1") {
    CHECK(shift_substitute(P("y1*y1"), VarName::even(1)) == P("y1*y1 + 2*y1 + 1"));
    // unital associators kill the shift
    CHECK(shift_substitute(P("(y1,y2,z1)"), VarName::even(1)) == P("(y1,y2,z1)"));
    CHECK(shift_substitute(P("y1*(y1*z1)"), VarName::even(1)) ==
          P("y1*(y1*z1) + 2*(y1*z1) + z1"));
    CHECK_THROWS_AS(shift_substitute(P("z1"), VarName::odd(1)), Error);
    // components of the shift are the partial linearizations
    auto comps = multihomogeneous_components(shift_substitute(P("y1*(y1*z1)"), VarName::even(1)));
    CHECK(comps.size() == 3);
}

TEST_CASE("canonical multidegree renaming") {
    MultiDegree d;
    d.add(VarName::even(5), 1);
    d.add(VarName::even(2), 2);
    d.add(VarName::odd(7), 1);
    auto [dc, ren] = canonical_multidegree(d);
    CHECK(dc.exponent(VarName::even(1)) == 2);
    CHECK(dc.exponent(VarName::even(2)) == 1);
    CHECK(dc.exponent(VarName::odd(1)) == 1);
    CHECK(ren.at(VarName::even(2)) == VarName::even(1));
    CHECK(ren.at(VarName::even(5)) == VarName::even(2));
    // renaming round trip on a polynomial
    JordanPoly p = JordanPoly::of_monomial(
        Monomial::product(Monomial::var(VarName::even(2)),
                          Monomial::product(Monomial::var(VarName::even(5)),
                                            Monomial::var(VarName::odd(7)))));
    CHECK(rename(rename(p, ren), inverse(ren)) == p);
}

TEST_CASE("long associator arity checks") {
    CHECK_THROWS_AS(long_associator({P("z1"), P("z2")}), Error);
    CHECK_THROWS_AS(long_associator({P("z1"), P("z2"), P("z3"), P("z4")}), Error);
}
