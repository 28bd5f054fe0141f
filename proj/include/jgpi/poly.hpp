#pragma once

#include <map>
#include <optional>
#include <vector>

#include "jgpi/monomial.hpp"

namespace jgpi {

/// Element of the free unitary commutative nonassociative algebra over Q:
/// a finite map canonical monomial -> nonzero rational. Elements of the
/// free (graded) Jordan algebra are represented here and reduced modulo
/// Jordan relations only where a component computation asks for it.
class JordanPoly {
  public:
    JordanPoly() = default;

    static JordanPoly zero() { return {}; }
    static JordanPoly unit() { return of_monomial(Monomial{}); }
    static JordanPoly of_var(VarName v) { return of_monomial(Monomial::var(v)); }
    static JordanPoly of_monomial(const Monomial& m, const Rat& c = Rat(1)) {
        JordanPoly p;
        p.add_term(m, c);
        return p;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    bool is_zero() const { return t_.empty(); }
    size_t num_terms() const { return t_.size(); }
    const std::map<Monomial, Rat, MonoLess>& terms() const { return t_; }

    JordanPoly& operator+=(const JordanPoly& o) {
        for (auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    JordanPoly& operator-=(const JordanPoly& o) {
        for (auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    JordanPoly& operator*=(const Rat& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [m, v] : t_) v *= c;
        return *this;
    }

    friend JordanPoly operator+(JordanPoly a, const JordanPoly& b) { return a += b; }
    friend JordanPoly operator-(JordanPoly a, const JordanPoly& b) { return a -= b; }
    friend JordanPoly operator*(JordanPoly a, const Rat& c) { return a *= c; }
    friend JordanPoly operator*(const Rat& c, JordanPoly a) { return a *= c; }
    JordanPoly operator-() const { return *this * Rat(-1); }

    friend bool operator==(const JordanPoly& a, const JordanPoly& b) { return a.t_ == b.t_; }

    /// The free bilinear commutative product.
    friend JordanPoly operator*(const JordanPoly& a, const JordanPoly& b) {
        JordanPoly r;
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) r.add_term(Monomial::product(ma, mb), ca * cb);
        return r;
    }

    std::string str() const;

  private:
    std::map<Monomial, Rat, MonoLess> t_;
};

/// (a,b,c) = (ab)c - a(bc).
JordanPoly associator(const JordanPoly& a, const JordanPoly& b, const JordanPoly& c);

/// Left-normed long associator ((a1,a2,a3),a4,a5),...; odd arity >= 3.
JordanPoly long_associator(const std::vector<JordanPoly>& args);

/// Partition of terms by multidegree; the values sum back to p.
std::map<MultiDegree, JordanPoly> multihomogeneous_components(const JordanPoly& p);

/// Multidegree if p is multihomogeneous (0 is vacuously so: returns empty).
std::optional<MultiDegree> multidegree_of(const JordanPoly& p);

/// Substitutes v -> v + 1 for an even variable and expands; throws if v is
/// odd. The multihomogeneous components of the result are the partial
/// linearizations of p at v.
JordanPoly shift_substitute(const JordanPoly& p, VarName v);

/// Leaf-wise substitution by monomials (unit allowed), recanonicalized.
Monomial substitute(const Monomial& m, const std::map<VarName, Monomial>& a);
JordanPoly substitute(const JordanPoly& p, const std::map<VarName, Monomial>& a);

/// Parity-preserving (or otherwise) renaming of variables.
Monomial rename(const Monomial& m, const Renaming& r);
JordanPoly rename(const JordanPoly& p, const Renaming& r);

/// True if no placeholder variable occurs.
bool fully_graded(const JordanPoly& p);

}  // namespace jgpi
