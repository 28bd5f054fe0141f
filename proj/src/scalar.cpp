#include "jgpi/scalar.hpp"

#include <algorithm>

namespace jgpi {

namespace {

// drops even leaves from a monomial tree; unit when everything is even
Monomial strip_even(const Monomial& m) {
    if (m.is_unit()) return m;
    if (m.is_var()) {
        VarName v = m.leaf();
        if (v.is_placeholder()) throw Error("placeholder variable in scalar reduction");
        return v.parity() == 0 ? Monomial{} : m;
    }
    return Monomial::product(strip_even(m.left()), strip_even(m.right()));
}

Monomial left_combed_prefix(const std::map<VarName, int>& exps) {
    Monomial m;
    for (auto& [v, e] : exps)
        for (int i = 0; i < e; ++i) m = Monomial::product(m, Monomial::var(v));
    return m;
}

struct PairsBare {
    std::vector<std::pair<VarName, VarName>> pairs;
    std::optional<VarName> bare;
};

// Structural fold: modulo (y,x1,x2)=0 the products z_i z_j are central, so a
// pure-odd monomial collapses to its pair multiset plus at most one bare
// variable, read off the tree.
PairsBare fold_pairs(const Monomial& m) {
    if (m.is_unit()) return {};
    if (m.is_var()) {
        if (m.leaf().parity() != 1) throw Error("even variable in odd-part decomposition");
        return {{}, m.leaf()};
    }
    PairsBare l = fold_pairs(m.left());
    PairsBare r = fold_pairs(m.right());
    PairsBare out;
    out.pairs = std::move(l.pairs);
    out.pairs.insert(out.pairs.end(), r.pairs.begin(), r.pairs.end());
    if (l.bare && r.bare) {
        VarName a = *l.bare, b = *r.bare;
        if (b < a) std::swap(a, b);
        out.pairs.emplace_back(a, b);
    } else if (l.bare) {
        out.bare = l.bare;
    } else if (r.bare) {
        out.bare = r.bare;
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

}  // namespace

JordanPoly ScalarFactoredForm::reassemble() const {
    return JordanPoly::of_monomial(left_combed_prefix(even_exponents)) * odd_part;
}

ScalarFactoredForm factor_scalar(const JordanPoly& p) {
    auto d = multidegree_of(p);
    if (!d) throw Error("factor_scalar needs a multihomogeneous polynomial");
    ScalarFactoredForm out;
    for (auto& [v, e] : d->exponents()) {
        if (v.is_placeholder()) throw Error("placeholder variable in scalar reduction");
        if (v.parity() == 0) out.even_exponents.emplace(v, e);
    }
    for (auto& [m, c] : p.terms()) out.odd_part.add_term(strip_even(m), c);
    return out;
}

JordanPoly MTerm::reassemble() const {
    Monomial m = bare ? Monomial::var(*bare) : Monomial{};
    for (auto& [a, b] : pairs)
        m = Monomial::product(m, Monomial::product(Monomial::var(a), Monomial::var(b)));
    return JordanPoly::of_monomial(m, coeff);
}

MDecomposition m_graded_decompose(const JordanPoly& p) {
    MDecomposition out;
    for (auto& [m, c] : p.terms()) {
        PairsBare pb = fold_pairs(m);
        MTerm t{c, std::move(pb.pairs), pb.bare};
        (t.bare ? out.odd_terms : out.even_terms).push_back(std::move(t));
    }
    return out;
}

JordanPoly graded_identity_to_weak(const JordanPoly& p) { return factor_scalar(p).odd_part; }

}  // namespace jgpi
