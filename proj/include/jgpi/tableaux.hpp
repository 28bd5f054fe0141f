#pragma once

#include "jgpi/commpoly.hpp"
#include "jgpi/linalg.hpp"
#include "jgpi/poly.hpp"

namespace jgpi {

/// Double tableau: rows of paired index sequences (p... | q...) with weakly
/// decreasing row lengths. Entries are positive, except that a 0-tableau has
/// the single entry p11 = 0 (it stands for the bare vector factor).
struct TabRow {
    std::vector<int> p, q;
};

struct DoubleTableau {
    std::vector<TabRow> rows;

    bool zero_tableau() const {
        return !rows.empty() && !rows[0].p.empty() && rows[0].p[0] == 0;
    }
    /// Multiset of the positive entries (the 0 marker is excluded).
    std::vector<int> content() const;
    void validate() const;
    std::string str() const;
};

/// Single row (p|q) of length m, as a tableau.
DoubleTableau single_row(std::vector<int> p, std::vector<int> q);

/// Tableau encoding of a product of pair factors t_i o t_j (one row per
/// pair) with an optional bare vector factor t_i0 (a leading (0|i0) row).
DoubleTableau product_tableau(const std::vector<std::pair<int, int>>& pairs,
                              std::optional<int> bare = std::nullopt);

/// phi of a tableau as a scalar polynomial in the coordinates t_{i,l},
/// 1 <= l <= n. For 0-tableaux the vector factor is paired against the
/// reserved formal vector t_0, which is exactly the straightening device
/// behind the 0-tableau basis statement: the 0 entry acts as the smallest
/// ordinary index.
CommPoly phi_scalarized(const DoubleTableau& t, int n, IndetTable& indets);

/// phi per the definition: scalar part, plus (for 0-tableaux) the vector
/// value as n coordinate polynomials.
struct TPoly {
    CommPoly scalar;
    std::vector<CommPoly> vec;
};
TPoly phi(const DoubleTableau& t, int n, IndetTable& indets);

bool is_doubly_standard(const DoubleTableau& t);

/// All doubly standard tableaux whose entry multiset is content (plus the 0
/// marker when zero is set) and whose first row has length <= n.
std::vector<DoubleTableau> standard_tableaux(const std::vector<int>& content, bool zero, int n);

/// Writes phi(t) as an exact combination of doubly standard (0-)tableaux of
/// the same content; the defining phi identity is re-verified on every call
/// and a failure to solve throws (the straightening basis must span).
std::vector<std::pair<Rat, DoubleTableau>> straighten(const DoubleTableau& t, int n);

struct BasisCertificate {
    long count = 0;        // doubly standard tableaux of the content
    int dim = 0;           // dim span of all products of matching content
    bool independent = false;
    bool spans = false;
};

/// Certifies, for one content, that the doubly standard tableaux are an
/// exact basis of the span of all matching pair products (one bare vector
/// factor allowed when zero is set).
BasisCertificate standard_basis_certificate(const std::vector<int>& content, int n, bool zero);

/// g_n = sum over S_{n+1} of sgn * z_{s(1)} (z_{n+2} z_{s(2)}) ... , the
/// alternating polynomial in odd variables z_1..z_{2n+1}; products are left
/// normed. (n+1)! terms.
JordanPoly build_gn(int n);

}  // namespace jgpi
