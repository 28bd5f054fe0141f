#include "jgpi/tableaux.hpp"

#include <algorithm>

namespace jgpi {

namespace {

int perm_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

int tvar(IndetTable& indets, int i, int l) {
    return indets.id("t" + std::to_string(i) + "_" + std::to_string(l));
}

// t_a o t_b expanded in coordinates; index 0 is the reserved formal vector.
CommPoly pair_poly(int a, int b, int n, IndetTable& indets) {
    CommPoly p;
    for (int l = 1; l <= n; ++l)
        p += CommPoly::indet(tvar(indets, a, l)) * CommPoly::indet(tvar(indets, b, l));
    return p;
}

// det((t_{p_i} o t_{q_j})) for one row.
CommPoly row_det(const TabRow& row, int n, IndetTable& indets) {
    size_t m = row.p.size();
    std::vector<int> idx(m);
    for (size_t i = 0; i < m; ++i) idx[i] = static_cast<int>(i);
    CommPoly det;
    do {
        CommPoly term = CommPoly::constant(Rat(perm_sign(idx)));
        for (size_t i = 0; i < m; ++i)
            term = term * pair_poly(row.p[i], row.q[static_cast<size_t>(idx[i])], n, indets);
        det += term;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return det;
}

}  // namespace

std::vector<int> DoubleTableau::content() const {
    std::vector<int> c;
    for (auto& r : rows) {
        for (int v : r.p)
            if (v != 0) c.push_back(v);
        for (int v : r.q) c.push_back(v);
    }
    std::sort(c.begin(), c.end());
    return c;
}

void DoubleTableau::validate() const {
    size_t prev = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        auto& r = rows[i];
        if (r.p.size() != r.q.size()) throw Error("tableau row with unequal p/q lengths");
        if (r.p.empty()) throw Error("empty tableau row");
        if (i > 0 && r.p.size() > prev) throw Error("tableau row lengths must weakly decrease");
        prev = r.p.size();
        for (size_t j = 0; j < r.p.size(); ++j) {
            bool zero_slot = (i == 0 && j == 0);
            if (r.p[j] < 0 || (r.p[j] == 0 && !zero_slot))
                throw Error("tableau entries must be positive (only p11 may be 0)");
            if (r.q[j] <= 0) throw Error("tableau q entries must be positive");
        }
    }
}

std::string DoubleTableau::str() const {
    std::string s;
    for (auto& r : rows) {
        s += '(';
        for (size_t j = 0; j < r.p.size(); ++j) {
            if (j) s += ' ';
            s += std::to_string(r.p[j]);
        }
        s += '|';
        for (size_t j = 0; j < r.q.size(); ++j) {
            if (j) s += ' ';
            s += std::to_string(r.q[j]);
        }
        s += ')';
    }
    return s;
}

DoubleTableau single_row(std::vector<int> p, std::vector<int> q) {
    DoubleTableau t;
    t.rows.push_back({std::move(p), std::move(q)});
    t.validate();
    return t;
}

DoubleTableau product_tableau(const std::vector<std::pair<int, int>>& pairs,
                              std::optional<int> bare) {
    DoubleTableau t;
    if (bare) t.rows.push_back({{0}, {*bare}});
    std::vector<std::pair<int, int>> ps = pairs;
    for (auto& [a, b] : ps)
        if (a > b) std::swap(a, b);
    std::sort(ps.begin(), ps.end());
    for (auto& [a, b] : ps) t.rows.push_back({{a}, {b}});
    t.validate();
    return t;
}

CommPoly phi_scalarized(const DoubleTableau& t, int n, IndetTable& indets) {
    t.validate();
    CommPoly acc = CommPoly::one();
    for (auto& r : t.rows) acc = acc * row_det(r, n, indets);
    return acc;
}

TPoly phi(const DoubleTableau& t, int n, IndetTable& indets) {
    t.validate();
    TPoly out;
    out.vec.assign(static_cast<size_t>(n), CommPoly{});
    if (!t.zero_tableau()) {
        out.scalar = phi_scalarized(t, n, indets);
        return out;
    }
    // first row is vector valued, remaining rows scalar
    CommPoly rest = CommPoly::one();
    for (size_t i = 1; i < t.rows.size(); ++i) rest = rest * row_det(t.rows[i], n, indets);
    const TabRow& r0 = t.rows[0];
    size_t m = r0.p.size();
    std::vector<int> idx(m);
    for (size_t i = 0; i < m; ++i) idx[i] = static_cast<int>(i);
    do {
        CommPoly term = CommPoly::constant(Rat(perm_sign(idx)));
        for (size_t i = 1; i < m; ++i)
            term = term * pair_poly(r0.p[i], r0.q[static_cast<size_t>(idx[i])], n, indets);
        int lead = r0.q[static_cast<size_t>(idx[0])];
        for (int l = 1; l <= n; ++l)
            out.vec[static_cast<size_t>(l - 1)] +=
                term * CommPoly::indet(tvar(indets, lead, l)) * rest;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

bool is_doubly_standard(const DoubleTableau& t) {
    t.validate();
    for (size_t i = 0; i < t.rows.size(); ++i) {
        auto& r = t.rows[i];
        for (size_t j = 0; j < r.p.size(); ++j) {
            if (j > 0 && !(r.p[j - 1] < r.p[j] && r.q[j - 1] < r.q[j])) return false;
            if (!(r.p[j] <= r.q[j])) return false;
            if (i > 0 && !(t.rows[i - 1].q[j] <= r.p[j])) return false;
        }
    }
    return true;
}

namespace {

// Backtracking fill of one shape with the content multiset; row-major, p
// side before q side, standardness checked as entries are placed.
void fill_shape(const std::vector<int>& shape, std::vector<int> pool, bool zero,
                std::vector<DoubleTableau>& out) {
    DoubleTableau t;
    t.rows.resize(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) {
        t.rows[i].p.assign(static_cast<size_t>(shape[i]), 0);
        t.rows[i].q.assign(static_cast<size_t>(shape[i]), 0);
    }
    if (zero) pool.insert(pool.begin(), 0);

    // positions: (row, 0=p/1=q, col)
    std::vector<std::tuple<size_t, int, size_t>> pos;
    for (size_t i = 0; i < shape.size(); ++i) {
        for (size_t j = 0; j < static_cast<size_t>(shape[i]); ++j) pos.push_back({i, 0, j});
        for (size_t j = 0; j < static_cast<size_t>(shape[i]); ++j) pos.push_back({i, 1, j});
    }
    std::vector<bool> used(pool.size(), false);

    auto ok = [&](size_t i, int side, size_t j, int v) {
        if (v == 0 && !(i == 0 && side == 0 && j == 0)) return false;
        auto& r = t.rows[i];
        if (side == 0) {
            if (j > 0 && !(r.p[j - 1] < v)) return false;
            if (i > 0 && !(t.rows[i - 1].q[j] <= v)) return false;
        } else {
            if (j > 0 && !(r.q[j - 1] < v)) return false;
            if (!(r.p[j] <= v)) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == pos.size()) {
            out.push_back(t);
            return;
        }
        auto [i, side, j] = pos[k];
        int last = -1;
        for (size_t u = 0; u < pool.size(); ++u) {
            if (used[u] || pool[u] == last) continue;
            if (!ok(i, side, j, pool[u])) continue;
            last = pool[u];
            used[u] = true;
            (side == 0 ? t.rows[i].p[j] : t.rows[i].q[j]) = pool[u];
            self(self, k + 1);
            used[u] = false;
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<DoubleTableau> standard_tableaux(const std::vector<int>& content, bool zero, int n) {
    std::vector<int> pool = content;
    std::sort(pool.begin(), pool.end());
    size_t total = pool.size() + (zero ? 1 : 0);
    std::vector<DoubleTableau> out;
    if (total % 2 != 0) return out;
    int cells = static_cast<int>(total / 2);

    // shapes: weakly decreasing partitions of `cells` with parts <= n
    std::vector<int> shape;
    auto shapes = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            fill_shape(shape, pool, zero, out);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            shape.push_back(p);
            self(self, left - p, p);
            shape.pop_back();
        }
    };
    shapes(shapes, cells, std::min(cells, n));
    return out;
}

std::vector<std::pair<Rat, DoubleTableau>> straighten(const DoubleTableau& t, int n) {
    t.validate();
    IndetTable indets;
    CommPoly target = phi_scalarized(t, n, indets);
    std::vector<DoubleTableau> basis = standard_tableaux(t.content(), t.zero_tableau(), n);
    std::vector<CommPoly> cols;
    cols.reserve(basis.size());
    for (auto& b : basis) cols.push_back(phi_scalarized(b, n, indets));

    // shared coefficient coordinates
    std::map<Expo, int> colid;
    auto vec_of = [&](const CommPoly& p) {
        SparseVec v;
        for (auto& [e, c] : p.terms()) {
            auto it = colid.find(e);
            int id;
            if (it == colid.end()) {
                id = static_cast<int>(colid.size());
                colid.emplace(e, id);
            } else {
                id = it->second;
            }
            v.emplace_back(id, c);
        }
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    };

    LinearSolver solver(1 << 24);
    for (auto& c : cols) solver.add_column(vec_of(c));
    auto sol = solver.solve(vec_of(target));
    if (!sol) throw Error("straightening failed: standard tableaux do not span this content");

    CommPoly residual = target;
    std::vector<std::pair<Rat, DoubleTableau>> out;
    for (size_t i = 0; i < basis.size(); ++i) {
        if ((*sol)[i].is_zero()) continue;
        residual -= (*sol)[i] * cols[i];
        out.emplace_back((*sol)[i], basis[i]);
    }
    if (!residual.is_zero()) throw Error("straightening residual is nonzero");
    return out;
}

BasisCertificate standard_basis_certificate(const std::vector<int>& content, int n, bool zero) {
    IndetTable indets;
    std::map<Expo, int> colid;
    auto vec_of = [&](const CommPoly& p) {
        SparseVec v;
        for (auto& [e, c] : p.terms()) {
            auto it = colid.find(e);
            int id;
            if (it == colid.end()) {
                id = static_cast<int>(colid.size());
                colid.emplace(e, id);
            } else {
                id = it->second;
            }
            v.emplace_back(id, c);
        }
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    };

    std::vector<int> pool = content;
    std::sort(pool.begin(), pool.end());

    // all perfect matchings into pair factors (with one bare factor if zero)
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> cur;
    auto match = [&](auto&& self, std::vector<int> rest) -> void {
        if (rest.empty()) {
            matchings.push_back(cur);
            return;
        }
        int a = rest[0];
        int lastb = -1;
        for (size_t j = 1; j < rest.size(); ++j) {
            if (rest[j] == lastb) continue;
            lastb = rest[j];
            std::vector<int> next;
            for (size_t k = 1; k < rest.size(); ++k)
                if (k != j) next.push_back(rest[k]);
            cur.emplace_back(a, rest[j]);
            self(self, std::move(next));
            cur.pop_back();
        }
    };

    RowSpace products;
    if (zero) {
        int lastbare = -1;
        for (size_t b = 0; b < pool.size(); ++b) {
            if (pool[b] == lastbare) continue;
            lastbare = pool[b];
            std::vector<int> rest = pool;
            rest.erase(rest.begin() + static_cast<long>(b));
            matchings.clear();
            match(match, rest);
            for (auto& m : matchings)
                products.insert(
                    vec_of(phi_scalarized(product_tableau(m, pool[b]), n, indets)));
        }
    } else {
        matchings.clear();
        match(match, pool);
        for (auto& m : matchings)
            products.insert(vec_of(phi_scalarized(product_tableau(m), n, indets)));
    }

    std::vector<DoubleTableau> basis = standard_tableaux(content, zero, n);
    RowSpace standards;
    for (auto& b : basis) standards.insert(vec_of(phi_scalarized(b, n, indets)));

    BasisCertificate cert;
    cert.count = static_cast<long>(basis.size());
    cert.dim = products.rank();
    cert.independent = standards.rank() == static_cast<int>(basis.size());
    cert.spans = standards.rank() == products.rank();
    return cert;
}

JordanPoly build_gn(int n) {
    if (n < 1) throw Error("g_n needs n >= 1");
    std::vector<int> perm(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) perm[static_cast<size_t>(i)] = i + 1;
    JordanPoly g;
    do {
        Monomial m = Monomial::var(VarName::odd(perm[0]));
        for (int i = 1; i <= n; ++i)
            m = Monomial::product(
                m, Monomial::product(Monomial::var(VarName::odd(n + 1 + i)),
                                     Monomial::var(VarName::odd(perm[static_cast<size_t>(i)]))));
        g.add_term(m, Rat(perm_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return g;
}

}  // namespace jgpi
