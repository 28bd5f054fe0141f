#include "jgpi/poly.hpp"

#include <algorithm>
#include <sstream>

namespace jgpi {

std::string JordanPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rat a = c.sign() < 0 ? -c : c;
        if (!(a == Rat(1)) || m.is_unit()) {
            os << a.str();
            if (!m.is_unit()) os << "*";
        }
        if (!m.is_unit()) os << m.str();
        first = false;
    }
    return os.str();
}

JordanPoly associator(const JordanPoly& a, const JordanPoly& b, const JordanPoly& c) {
    return (a * b) * c - a * (b * c);
}

JordanPoly long_associator(const std::vector<JordanPoly>& args) {
    if (args.size() < 3 || args.size() % 2 == 0)
        throw Error("long associator needs an odd number (>= 3) of arguments");
    JordanPoly acc = associator(args[0], args[1], args[2]);
    for (size_t i = 3; i + 1 < args.size(); i += 2) acc = associator(acc, args[i], args[i + 1]);
    return acc;
}

std::map<MultiDegree, JordanPoly> multihomogeneous_components(const JordanPoly& p) {
    std::map<MultiDegree, JordanPoly> r;
    for (auto& [m, c] : p.terms()) r[m.multidegree()].add_term(m, c);
    return r;
}

std::optional<MultiDegree> multidegree_of(const JordanPoly& p) {
    std::optional<MultiDegree> d;
    for (auto& [m, c] : p.terms()) {
        MultiDegree md = m.multidegree();
        if (!d)
            d = md;
        else if (*d != md)
            return std::nullopt;
    }
    if (!d) d = MultiDegree{};  // zero polynomial
    return d;
}

namespace {

JordanPoly eval_tree(const Monomial& m, const std::map<VarName, JordanPoly>& a) {
    if (m.is_unit()) return JordanPoly::unit();
    if (m.is_var()) {
        auto it = a.find(m.leaf());
        return it == a.end() ? JordanPoly::of_var(m.leaf()) : it->second;
    }
    return eval_tree(m.left(), a) * eval_tree(m.right(), a);
}

}  // namespace

JordanPoly shift_substitute(const JordanPoly& p, VarName v) {
    if (v.kind != VarName::Kind::Even)
        throw Error("shift substitution y -> y+1 requires an even variable");
    std::map<VarName, JordanPoly> a;
    a.emplace(v, JordanPoly::of_var(v) + JordanPoly::unit());
    JordanPoly r;
    for (auto& [m, c] : p.terms()) r += c * eval_tree(m, a);
    return r;
}

Monomial substitute(const Monomial& m, const std::map<VarName, Monomial>& a) {
    if (m.is_unit()) return m;
    if (m.is_var()) {
        auto it = a.find(m.leaf());
        return it == a.end() ? m : it->second;
    }
    return Monomial::product(substitute(m.left(), a), substitute(m.right(), a));
}

JordanPoly substitute(const JordanPoly& p, const std::map<VarName, Monomial>& a) {
    JordanPoly r;
    for (auto& [m, c] : p.terms()) r.add_term(substitute(m, a), c);
    return r;
}

Monomial rename(const Monomial& m, const Renaming& r) {
    if (m.is_unit()) return m;
    if (m.is_var()) {
        auto it = r.find(m.leaf());
        return it == r.end() ? m : Monomial::var(it->second);
    }
    return Monomial::product(rename(m.left(), r), rename(m.right(), r));
}

JordanPoly rename(const JordanPoly& p, const Renaming& r) {
    JordanPoly q;
    for (auto& [m, c] : p.terms()) q.add_term(rename(m, r), c);
    return q;
}

bool fully_graded(const JordanPoly& p) {
    for (auto& [m, c] : p.terms()) {
        MultiDegree d = m.multidegree();
        for (auto& [v, e] : d.exponents())
            if (v.is_placeholder()) return false;
    }
    return true;
}

std::pair<MultiDegree, Renaming> canonical_multidegree(const MultiDegree& d) {
    std::vector<std::pair<VarName, int>> even, odd;
    for (auto& [v, e] : d.exponents()) {
        if (v.is_placeholder()) throw Error("placeholder variable in multidegree");
        (v.parity() == 0 ? even : odd).push_back({v, e});
    }
    auto by_exp = [](const std::pair<VarName, int>& a, const std::pair<VarName, int>& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    };
    std::stable_sort(even.begin(), even.end(), by_exp);
    std::stable_sort(odd.begin(), odd.end(), by_exp);
    Renaming r;
    MultiDegree c;
    for (size_t i = 0; i < even.size(); ++i) {
        r.emplace(even[i].first, VarName::even(static_cast<int>(i) + 1));
        c.add(VarName::even(static_cast<int>(i) + 1), even[i].second);
    }
    for (size_t i = 0; i < odd.size(); ++i) {
        r.emplace(odd[i].first, VarName::odd(static_cast<int>(i) + 1));
        c.add(VarName::odd(static_cast<int>(i) + 1), odd[i].second);
    }
    return {c, r};
}

}  // namespace jgpi
