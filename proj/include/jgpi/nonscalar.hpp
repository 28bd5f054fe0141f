#pragma once

#include "jgpi/tideal.hpp"

namespace jgpi {

/// Left-normed (proper) associator (x1,...,x_{2k+1}).
struct ProperAssociator {
    std::vector<VarName> args;  // odd length >= 3

    MultiDegree multidegree() const {
        MultiDegree d;
        for (VarName v : args) d.add(v, 1);
        return d;
    }
    int parity() const { return multidegree().parity(); }
    JordanPoly expand() const;
    std::string str() const;
};

/// All argument orderings of the multiset d, in lexicographic order.
/// Throws when the total degree is even (no proper associator exists).
std::vector<ProperAssociator> enumerate_proper_associators(const MultiDegree& d);

enum class AssocRelation { Plus, Minus, BothZero, Independent };

/// Decides u1 = u2, u1 = -u2, both 0, or neither, modulo the nonscalar
/// T-ideal component at the common multidegree. 'Independent' contradicts
/// the uniqueness of associators and flags a verification failure.
AssocRelation associator_relation(const ProperAssociator& u1, const ProperAssociator& u2,
                                  Engine& eng);

/// Lexicographically least proper associator of multidegree d that is
/// nonzero in L = J(X)/I; nullopt when all of them vanish.
std::optional<ProperAssociator> choose_omega0(const MultiDegree& d, Engine& eng);

/// Element of the spanning set A: an even-variable prefix times a pure odd
/// block (i), an odd associator (ii), a leading odd variable times an odd
/// associator (iii), or an even associator (iv). Associators are the Omega0
/// representatives.
struct AElement {
    enum class Kind { I, II, III, IV };
    Kind kind;
    MultiDegree even_prefix;
    std::vector<VarName> odd_block;          // kind I
    std::optional<VarName> lead_odd;         // kind III
    std::optional<ProperAssociator> assoc;   // kinds II, III, IV
    JordanPoly expansion;
    std::string label;
};

/// All A-elements of multidegree d, deterministic order. Elements whose
/// reductions mod I coincide up to sign (Omega0 uniqueness in action), and
/// elements that vanish mod I, are dropped so that the result is a set of
/// distinct nonzero elements of L.
std::vector<AElement> enumerate_A(const MultiDegree& d, Engine& eng);

/// Coordinates of p over enumerate_A(d) modulo the ideal component; throws
/// if the system is inconsistent (spanning failure).
std::vector<std::pair<AElement, Rat>> normal_form(const JordanPoly& p, Engine& eng);

/// Partition by even-prefix content.
struct SimilarityClass {
    MultiDegree even_prefix;
    std::vector<AElement> members;
};
std::vector<SimilarityClass> similarity_classes(const std::vector<AElement>& elems);

}  // namespace jgpi
