#pragma once

#include <optional>
#include <set>

#include "jgpi/commpoly.hpp"
#include "jgpi/poly.hpp"

namespace jgpi {

/// Element of J2 (symmetric 2x2 matrices) in the basis I, a, b with
/// a^2 = b^2 = I and a.b = 0; coordinates are polynomials so generic
/// elements evaluate exactly. Nonscalar grading: even part span(I,a),
/// odd part span(b).
struct J2Element {
    CommPoly cI, cA, cB;

    friend bool operator==(const J2Element&, const J2Element&) = default;
    bool is_zero() const { return cI.is_zero() && cA.is_zero() && cB.is_zero(); }
};

J2Element j2_unit();
J2Element j2_mul(const J2Element& x, const J2Element& y);

/// Gram matrix of the symmetric bilinear form on V_n: the identity form,
/// an explicit symmetric rational matrix, or fully symbolic entries
/// g_ij = g_ji (checks every symmetric form at once).
struct GramSpec {
    enum class Mode { Identity, Symbolic, Explicit };
    Mode mode = Mode::Identity;
    std::vector<std::vector<Rat>> entries;  // Explicit only; must be symmetric n x n

    static GramSpec identity() { return {}; }
    static GramSpec symbolic() { return {Mode::Symbolic, {}}; }
    static GramSpec explicit_matrix(std::vector<std::vector<Rat>> m);

    std::string key() const;  // cache key fragment
};

/// Element of B_n = K + V_n: scalar plus coordinate vector. Scalar grading:
/// even part = scalars, odd part = vectors.
struct BnElement {
    CommPoly scalar;
    std::vector<CommPoly> vec;

    friend bool operator==(const BnElement&, const BnElement&) = default;
    bool is_zero() const {
        if (!scalar.is_zero()) return false;
        for (auto& c : vec)
            if (!c.is_zero()) return false;
        return true;
    }
};

BnElement bn_unit(int n);

/// Inner-product table for a Bn evaluation: entries as polynomials (constant
/// for identity/explicit grams, indeterminates in symbolic mode).
class GramTable {
  public:
    GramTable(int n, const GramSpec& spec, IndetTable& indets);
    const CommPoly& at(int i, int j) const { return g_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)); }
    int n() const { return n_; }

  private:
    int n_;
    std::vector<std::vector<CommPoly>> g_;
};

BnElement bn_mul(const BnElement& x, const BnElement& y, const GramTable& gram);

/// Exact homomorphic evaluation. Assignments must cover every variable of p
/// and respect the grading (even -> even part, odd -> odd part).
J2Element eval_j2(const JordanPoly& p, const std::map<VarName, J2Element>& assign);
BnElement eval_bn(const JordanPoly& p, int n, const GramTable& gram,
                  const std::map<VarName, BnElement>& assign);

/// Generic assignment contexts: one fresh indeterminate block per variable,
/// allocated in sorted variable order for reproducible naming.
struct J2Generic {
    IndetTable indets;
    std::map<VarName, J2Element> assign;
};
J2Generic j2_generic(const std::set<VarName>& vars);

struct BnGeneric {
    IndetTable indets;
    std::map<VarName, BnElement> assign;
    std::optional<GramTable> gram;
};
BnGeneric bn_generic(int n, const GramSpec& spec, const std::set<VarName>& vars);

std::set<VarName> variables_of(const JordanPoly& p);

/// Generic vanishing in the graded model; exact because the base field is
/// infinite. Throws on placeholder variables or parity violations.
bool is_graded_identity_j2_nonscalar(const JordanPoly& p);
bool is_graded_identity_bn_scalar(const JordanPoly& p, int n,
                                  const GramSpec& gram = GramSpec::identity());

/// Weak identity for the pair (B_n, V_n): every variable (all must be odd)
/// is substituted by a generic vector.
bool is_weak_identity_bn(const JordanPoly& p, int n, const GramSpec& gram = GramSpec::identity());

/// A concrete non-vanishing substitution, for negative verdicts. Coordinates
/// are listed per variable: J2 as (I,a,b), Bn as (scalar, v1..vn).
struct Witness {
    std::vector<std::pair<std::string, std::vector<Rat>>> assignment;
    std::vector<std::pair<std::string, Rat>> value;  // nonzero coordinates
};

std::optional<Witness> find_witness_j2(const JordanPoly& p);
std::optional<Witness> find_witness_bn(const JordanPoly& p, int n, const GramSpec& gram,
                                       bool weak);

}  // namespace jgpi
