#include "jgpi/nonscalar.hpp"

#include <algorithm>

namespace jgpi {

JordanPoly ProperAssociator::expand() const {
    if (args.size() < 3 || args.size() % 2 == 0)
        throw Error("proper associator needs odd arity >= 3");
    std::vector<JordanPoly> ps;
    ps.reserve(args.size());
    for (VarName v : args) ps.push_back(JordanPoly::of_var(v));
    return long_associator(ps);
}

std::string ProperAssociator::str() const {
    std::string s = "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) s += ',';
        s += args[i].str();
    }
    return s + ")";
}

std::vector<ProperAssociator> enumerate_proper_associators(const MultiDegree& d) {
    int n = d.total();
    if (n % 2 == 0) throw Error("no proper associator of even total degree");
    if (n < 3) throw Error("no proper associator of degree < 3");
    std::vector<VarName> seq;
    for (auto& [v, e] : d.exponents())
        for (int i = 0; i < e; ++i) seq.push_back(v);
    std::sort(seq.begin(), seq.end());
    std::vector<ProperAssociator> out;
    do {
        out.push_back({seq});
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

namespace {

// reduction of an associator expansion mod the nonscalar ideal, in the
// canonical naming of d
JordanPoly reduced_expansion(const ProperAssociator& u, Engine& eng) {
    return eng.reduce_mod_ideal(u.expand(), GenSpec::nonscalar_j2());
}

}  // namespace

AssocRelation associator_relation(const ProperAssociator& u1, const ProperAssociator& u2,
                                  Engine& eng) {
    if (u1.multidegree() != u2.multidegree()) throw Error("associator multidegree mismatch");
    JordanPoly r1 = reduced_expansion(u1, eng);
    JordanPoly r2 = reduced_expansion(u2, eng);
    if (r1.is_zero() && r2.is_zero()) return AssocRelation::BothZero;
    if (r1 == r2) return AssocRelation::Plus;
    if (r1 == -r2) return AssocRelation::Minus;
    return AssocRelation::Independent;
}

std::optional<ProperAssociator> choose_omega0(const MultiDegree& d, Engine& eng) {
    if (d.total() % 2 == 0 || d.total() < 3) return std::nullopt;
    for (const ProperAssociator& u : enumerate_proper_associators(d))
        if (!reduced_expansion(u, eng).is_zero()) return u;
    return std::nullopt;
}

namespace {

Monomial left_combed(const std::vector<VarName>& vars) {
    Monomial m;
    for (VarName v : vars) m = Monomial::product(m, Monomial::var(v));
    return m;
}

std::vector<VarName> expand_multiset(const MultiDegree& d, int parity_filter = -1) {
    std::vector<VarName> out;
    for (auto& [v, e] : d.exponents()) {
        if (parity_filter >= 0 && v.parity() != parity_filter) continue;
        for (int i = 0; i < e; ++i) out.push_back(v);
    }
    return out;
}

std::string prefix_label(const MultiDegree& e) {
    if (e.empty()) return "";
    std::string s = "(";
    bool first = true;
    for (VarName v : expand_multiset(e)) {
        if (!first) s += '*';
        s += v.str();
        first = false;
    }
    return s + ")*";
}

}  // namespace

std::vector<AElement> enumerate_A(const MultiDegree& d, Engine& eng) {
    eng.check_degree(d);
    std::vector<AElement> out;
    MultiDegree d_even;
    for (auto& [v, e] : d.exponents())
        if (v.parity() == 0) d_even.add(v, e);

    // type (i): all evens times the pure odd block
    {
        AElement a;
        a.kind = AElement::Kind::I;
        a.even_prefix = d_even;
        a.odd_block = expand_multiset(d, 1);
        Monomial pre = left_combed(expand_multiset(d_even));
        Monomial blk = left_combed(a.odd_block);
        Monomial full = Monomial::product(pre, blk);
        a.expansion = JordanPoly::of_monomial(full);
        a.label = full.str();
        out.push_back(std::move(a));
    }

    // types (ii)-(iv): an even prefix times an associator payload
    d_even.for_each_sub([&](const MultiDegree& prefix) {
        MultiDegree rest = d - prefix;
        int rest_deg = rest.total();
        Monomial pre = left_combed(expand_multiset(prefix));

        // (ii) / (iv): Omega0 representative on all of rest
        if (rest_deg >= 3 && rest_deg % 2 == 1) {
            if (auto u = choose_omega0(rest, eng)) {
                AElement a;
                a.kind = rest.parity() == 1 ? AElement::Kind::II : AElement::Kind::IV;
                a.even_prefix = prefix;
                a.assoc = u;
                a.expansion = JordanPoly::of_monomial(pre) * u->expand();
                a.label = prefix_label(prefix) + u->str();
                out.push_back(std::move(a));
            }
        }

        // (iii): leading odd variable times an odd associator
        if (rest_deg >= 4 && rest_deg % 2 == 0) {
            for (auto& [v, e] : rest.exponents()) {
                if (v.parity() != 1) continue;
                MultiDegree inner = rest;
                inner.add(v, -1);
                if (inner.parity() != 1 || inner.total() < 3) continue;
                if (auto u = choose_omega0(inner, eng)) {
                    AElement a;
                    a.kind = AElement::Kind::III;
                    a.even_prefix = prefix;
                    a.lead_odd = v;
                    a.assoc = u;
                    a.expansion = JordanPoly::of_monomial(pre) *
                                  (JordanPoly::of_var(v) * u->expand());
                    a.label = prefix_label(prefix) + v.str() + "*" + u->str();
                    out.push_back(std::move(a));
                }
            }
        }
    });

    // Keep one representative per element of L: drop zero reductions and
    // +/- duplicates (Omega0 uniqueness makes coincidences inevitable when
    // the same payload appears with different bookkeeping).
    std::vector<AElement> kept;
    std::vector<JordanPoly> reductions;
    for (auto& a : out) {
        JordanPoly r = eng.reduce_mod_ideal(a.expansion, GenSpec::nonscalar_j2());
        if (r.is_zero()) continue;
        bool dup = false;
        for (auto& seen : reductions)
            if (seen == r || seen == -r) {
                dup = true;
                break;
            }
        if (dup) continue;
        reductions.push_back(std::move(r));
        kept.push_back(std::move(a));
    }
    return kept;
}

std::vector<std::pair<AElement, Rat>> normal_form(const JordanPoly& p, Engine& eng) {
    auto d = multidegree_of(p);
    if (!d) throw Error("normal form needs a multihomogeneous polynomial");
    if (p.is_zero()) return {};
    eng.check_degree(*d);

    auto [dc, ren] = canonical_multidegree(*d);
    JordanPoly pc = rename(p, ren);
    std::vector<AElement> A = enumerate_A(dc, eng);

    FreeComponent fc(dc);
    auto ideal = eng.ideal_rows(GenSpec::nonscalar_j2(), dc);
    LinearSolver solver(1 << 24);
    for (auto& a : A) solver.add_column(ideal->reduce(fc.vec(a.expansion)));
    auto sol = solver.solve(ideal->reduce(fc.vec(pc)));
    if (!sol) throw Error("normal form failed: A does not span this component");

    Renaming back = inverse(ren);
    std::vector<std::pair<AElement, Rat>> out;
    for (size_t i = 0; i < A.size(); ++i) {
        if ((*sol)[i].is_zero()) continue;
        AElement a = A[i];
        a.expansion = rename(a.expansion, back);
        out.emplace_back(std::move(a), (*sol)[i]);
    }
    return out;
}

std::vector<SimilarityClass> similarity_classes(const std::vector<AElement>& elems) {
    std::vector<SimilarityClass> classes;
    for (const AElement& a : elems) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const SimilarityClass& c) { return c.even_prefix == a.even_prefix; });
        if (it == classes.end()) {
            classes.push_back({a.even_prefix, {a}});
        } else {
            it->members.push_back(a);
        }
    }
    return classes;
}

}  // namespace jgpi
