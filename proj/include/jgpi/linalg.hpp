#pragma once

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "jgpi/rational.hpp"

namespace jgpi {

/// Sparse rational vector: (column, coefficient) pairs, sorted by column,
/// no zero coefficients.
using SparseVec = std::vector<std::pair<int, Rat>>;

/// x + c*y, merged.
SparseVec axpy(const SparseVec& x, const Rat& c, const SparseVec& y);

/// Incremental reduced row-echelon form over Q with sparse rows.
///
/// Rows are kept fully reduced (each pivot column appears in exactly one
/// row, with coefficient 1), so the row list is a canonical basis of the
/// span and membership reduction touches each pivot column at most once.
/// Columns >= pivot_limit never become pivots; a vector whose reduction is
/// supported there alone is reported dependent, which is what the
/// augmented-column solvers rely on.
class RowSpace {
  public:
    explicit RowSpace(int pivot_limit = std::numeric_limits<int>::max())
        : pivot_limit_(pivot_limit) {}

    /// Canonical representative of v modulo the row space.
    SparseVec reduce(SparseVec v) const;

    /// Reduce-and-adopt. Returns true if the rank grew.
    bool insert(SparseVec v);

    /// Adopts an already-reduced nonzero vector (pivot below the limit).
    void adopt(SparseVec reduced);

    int rank() const { return static_cast<int>(rows_.size()); }
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    /// Rows ordered by pivot column (canonical for a fixed column order).
    std::vector<SparseVec> sorted_rows() const;
    const std::map<int, int>& pivots() const { return pivot_row_; }
    bool is_pivot(int col) const { return pivot_row_.count(col) != 0; }

    bool same_space(const RowSpace& o) const;

  private:
    void index_add(int col, int row);
    void index_remove(int col, int row);
    void replace_row(int idx, SparseVec next);

    int pivot_limit_;
    std::vector<SparseVec> rows_;
    std::map<int, int> pivot_row_;                       // pivot col -> row index
    std::unordered_map<int, std::set<int>> col_rows_;    // col -> rows with a nonzero there
};

/// Expresses targets as linear combinations of a fixed set of columns.
/// Columns live in the "main" coordinate block; bookkeeping uses augmented
/// coordinates past aug_base.
class LinearSolver {
  public:
    /// aug_base must exceed every main coordinate used.
    explicit LinearSolver(int aug_base) : aug_base_(aug_base), rs_(aug_base) {}

    /// Adds a column vector a_i; i is the 0-based column id.
    void add_column(const SparseVec& a);

    /// If target == sum c_i * a_i has a solution, returns the coefficient
    /// vector indexed by column id; otherwise nullopt.
    std::optional<std::vector<Rat>> solve(const SparseVec& target) const;

    int num_columns() const { return ncols_; }

  private:
    int aug_base_;
    int ncols_ = 0;
    RowSpace rs_;
};

}  // namespace jgpi
