#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "jgpi/linalg.hpp"

using namespace jgpi;

namespace {
SparseVec V(std::initializer_list<std::pair<int, long>> entries) {
    SparseVec v;
    for (auto& [c, x] : entries)
        if (x != 0) v.emplace_back(c, Rat(x));
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return v;
}
}  // namespace

TEST_CASE("axpy merges and cancels") {
    CHECK(axpy(V({{0, 1}, {2, 3}}), Rat(2), V({{1, 1}, {2, -1}})) == V({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(axpy(V({{0, 1}}), Rat(-1), V({{0, 1}})).empty());
}

TEST_CASE("rank and reduction on a small matrix") {
    RowSpace rs;
    CHECK(rs.insert(V({{0, 1}, {1, 2}})));
    CHECK(rs.insert(V({{1, 1}, {2, 1}})));
    CHECK_FALSE(rs.insert(V({{0, 1}, {1, 1}, {2, -1}})));  // dependent
    CHECK(rs.rank() == 2);
    CHECK(rs.contains(V({{0, 2}, {1, 2}, {2, -2}})));
    CHECK_FALSE(rs.contains(V({{2, 1}})));
    // canonical reduced form: rows have unit pivots and disjoint pivots
    for (auto& row : rs.sorted_rows()) {
        CHECK(row[0].second == Rat(1));
        for (size_t i = 1; i < row.size(); ++i) CHECK_FALSE(rs.is_pivot(row[i].first));
    }
}

TEST_CASE("rank is insertion-order invariant") {
    std::vector<SparseVec> rows = {
        V({{0, 1}, {1, 1}}),          V({{1, 1}, {2, 1}}),          V({{0, 1}, {2, -1}}),
        V({{3, 2}, {4, 6}}),          V({{0, 3}, {1, 3}, {3, 1}}),  V({{4, 3}}),
    };
    std::vector<int> order = {0, 1, 2, 3, 4, 5};
    std::vector<int> ranks;
    std::sort(order.begin(), order.end());
    do {
        RowSpace rs;
        for (int i : order) rs.insert(rows[static_cast<size_t>(i)]);
        ranks.push_back(rs.rank());
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(std::all_of(ranks.begin(), ranks.end(), [&](int r) { return r == ranks[0]; }));
}

TEST_CASE("same_space is representation independent") {
    RowSpace a, b;
    a.insert(V({{0, 1}, {1, 1}}));
    a.insert(V({{1, 2}}));
    b.insert(V({{0, 3}}));
    b.insert(V({{0, 5}, {1, 7}}));
    CHECK(a.same_space(b));
    b.insert(V({{2, 1}}));
    CHECK_FALSE(a.same_space(b));
}

TEST_CASE("solver expresses targets in the column span") {
    LinearSolver s(100);
    s.add_column(V({{0, 1}, {1, 1}}));         // a0
    s.add_column(V({{1, 1}, {2, 1}}));         // a1
    s.add_column(V({{0, 1}, {2, -1}}));        // a2 = a0 - a1 (dependent)
    auto sol = s.solve(V({{0, 2}, {1, 3}, {2, 1}}));
    REQUIRE(sol.has_value());
    // verify the combination reproduces the target
    SparseVec acc;
    std::vector<SparseVec> cols = {V({{0, 1}, {1, 1}}), V({{1, 1}, {2, 1}}),
                                   V({{0, 1}, {2, -1}})};
    for (size_t i = 0; i < cols.size(); ++i) acc = axpy(acc, (*sol)[i], cols[i]);
    CHECK(acc == V({{0, 2}, {1, 3}, {2, 1}}));
    CHECK_FALSE(s.solve(V({{3, 1}})).has_value());
}

TEST_CASE("pivot limit keeps augmented columns out of the basis") {
    RowSpace rs(10);
    CHECK(rs.insert(V({{0, 1}, {10, 1}})));
    CHECK_FALSE(rs.insert(V({{10, 5}})));  // lives past the limit
    CHECK(rs.rank() == 1);
}
