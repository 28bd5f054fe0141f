#pragma once

#include "jgpi/tideal.hpp"

namespace jgpi {

/// Factored form of a multihomogeneous polynomial modulo the scalar-grading
/// identity (y,x1,x2) = 0: an even exponent record times a polynomial in the
/// odd variables alone.
struct ScalarFactoredForm {
    std::map<VarName, int> even_exponents;
    JordanPoly odd_part;

    /// y1^n1 ... yp^np * odd_part as an element of the free algebra (even
    /// prefix left-combed); congruent to the input mod the (6)-ideal.
    JordanPoly reassemble() const;
};

/// Migrates every even variable outward using (y,x1,x2) = 0; throws on
/// non-multihomogeneous input.
ScalarFactoredForm factor_scalar(const JordanPoly& p);

/// One spanning term of M modulo the (6)-ideal: a product of odd pairs,
/// with a bare leading odd variable for odd-parity terms.
struct MTerm {
    Rat coeff;
    std::vector<std::pair<VarName, VarName>> pairs;
    std::optional<VarName> bare;

    JordanPoly reassemble() const;
};

struct MDecomposition {
    std::vector<MTerm> even_terms;  // products of pairs
    std::vector<MTerm> odd_terms;   // bare variable times pairs
};

/// Rewrites a polynomial in odd variables modulo the (6)-ideal into the
/// Lemma-"Mgraded" spanning shape; pair products are central there, so the
/// rewrite is a per-monomial structural fold.
MDecomposition m_graded_decompose(const JordanPoly& p);

/// The odd factor g of p; p is a graded identity of B_n iff g is a weak
/// identity of (B_n, V_n).
JordanPoly graded_identity_to_weak(const JordanPoly& p);

}  // namespace jgpi
