#pragma once

#include "jgpi/linalg.hpp"
#include "jgpi/poly.hpp"

namespace jgpi {

/// All canonical monomials of the given multidegree, in monomial order.
/// Degree n multilinear components have (2n-3)!! of them.
std::vector<Monomial> enumerate_monomials(const MultiDegree& d);

/// Counts without materializing (same recursion).
long count_monomials(const MultiDegree& d);

/// A multidegree component of the free commutative nonassociative algebra
/// with its ordered monomial basis; converts polynomials to coordinate
/// vectors and back.
class FreeComponent {
  public:
    explicit FreeComponent(const MultiDegree& d);

    const MultiDegree& degree() const { return d_; }
    int dim() const { return static_cast<int>(mons_.size()); }
    const std::vector<Monomial>& monomials() const { return mons_; }
    const Monomial& monomial(int i) const { return mons_.at(static_cast<size_t>(i)); }

    int index(const Monomial& m) const;

    /// Throws if p has a term outside this component.
    SparseVec vec(const JordanPoly& p) const;
    JordanPoly poly(const SparseVec& v) const;

  private:
    MultiDegree d_;
    std::vector<Monomial> mons_;
    std::map<Monomial, int, MonoLess> idx_;
};

}  // namespace jgpi
