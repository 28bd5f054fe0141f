#include "jgpi/linalg.hpp"

#include <algorithm>
#include <optional>

namespace jgpi {

SparseVec axpy(const SparseVec& x, const Rat& c, const SparseVec& y) {
    SparseVec r;
    r.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first < y[j].first) {
            r.push_back(x[i++]);
        } else if (x[i].first > y[j].first) {
            Rat v = c * y[j].second;
            if (!v.is_zero()) r.emplace_back(y[j].first, v);
            ++j;
        } else {
            Rat v = x[i].second + c * y[j].second;
            if (!v.is_zero()) r.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    while (i < x.size()) r.push_back(x[i++]);
    while (j < y.size()) {
        Rat v = c * y[j].second;
        if (!v.is_zero()) r.emplace_back(y[j].first, v);
        ++j;
    }
    return r;
}

SparseVec RowSpace::reduce(SparseVec v) const {
    // Pivot rows carry non-pivot tails only, so each elimination removes one
    // pivot column and never reintroduces another that was already passed.
    size_t i = 0;
    while (i < v.size()) {
        auto it = pivot_row_.find(v[i].first);
        if (it == pivot_row_.end()) {
            ++i;
            continue;
        }
        v = axpy(v, -v[i].second, rows_[it->second]);
    }
    return v;
}

void RowSpace::index_add(int col, int row) { col_rows_[col].insert(row); }

void RowSpace::index_remove(int col, int row) {
    auto it = col_rows_.find(col);
    if (it == col_rows_.end()) return;
    it->second.erase(row);
    if (it->second.empty()) col_rows_.erase(it);
}

void RowSpace::replace_row(int idx, SparseVec next) {
    for (auto& [c, x] : rows_[idx]) index_remove(c, idx);
    rows_[idx] = std::move(next);
    for (auto& [c, x] : rows_[idx]) index_add(c, idx);
}

void RowSpace::adopt(SparseVec r) {
    if (r.empty() || r[0].first >= pivot_limit_) throw Error("adopt: not a pivot row");
    int p = r[0].first;
    if (!(r[0].second == Rat(1))) {
        Rat inv = Rat(1) / r[0].second;
        for (auto& [c, x] : r) x *= inv;
    }
    // keep existing rows fully reduced
    auto hit = col_rows_.find(p);
    if (hit != col_rows_.end()) {
        std::vector<int> touched(hit->second.begin(), hit->second.end());
        for (int ri : touched) {
            const SparseVec& row = rows_[ri];
            auto at = std::lower_bound(row.begin(), row.end(), p,
                                       [](const auto& e, int c) { return e.first < c; });
            if (at == row.end() || at->first != p) continue;
            replace_row(ri, axpy(row, -at->second, r));
        }
    }
    int idx = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    for (auto& [c, x] : rows_[idx]) index_add(c, idx);
    pivot_row_.emplace(p, idx);
}

bool RowSpace::insert(SparseVec v) {
    SparseVec r = reduce(std::move(v));
    if (r.empty() || r[0].first >= pivot_limit_) return false;
    adopt(std::move(r));
    return true;
}

std::vector<SparseVec> RowSpace::sorted_rows() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (auto& [p, idx] : pivot_row_) out.push_back(rows_[idx]);
    return out;
}

bool RowSpace::same_space(const RowSpace& o) const {
    if (rows_.size() != o.rows_.size()) return false;
    auto a = pivot_row_.begin();
    auto b = o.pivot_row_.begin();
    for (; a != pivot_row_.end(); ++a, ++b) {
        if (a->first != b->first) return false;
        if (rows_[a->second] != o.rows_[b->second]) return false;
    }
    return true;
}

void LinearSolver::add_column(const SparseVec& a) {
    SparseVec row = a;
    row.emplace_back(aug_base_ + ncols_, Rat(1));
    rs_.insert(std::move(row));
    ++ncols_;
}

std::optional<std::vector<Rat>> LinearSolver::solve(const SparseVec& target) const {
    SparseVec r = rs_.reduce(target);
    std::vector<Rat> coeff(ncols_, Rat(0));
    for (auto& [c, x] : r) {
        if (c < aug_base_) return std::nullopt;  // residual outside the span
        coeff[c - aug_base_] = -x;
    }
    return coeff;
}

}  // namespace jgpi
