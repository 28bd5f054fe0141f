#include "jgpi/models.hpp"

namespace jgpi {

J2Element j2_unit() { return {CommPoly::one(), CommPoly{}, CommPoly{}}; }

J2Element j2_mul(const J2Element& x, const J2Element& y) {
    return {x.cI * y.cI + x.cA * y.cA + x.cB * y.cB,
            x.cI * y.cA + y.cI * x.cA,
            x.cI * y.cB + y.cI * x.cB};
}

GramSpec GramSpec::explicit_matrix(std::vector<std::vector<Rat>> m) {
    GramSpec g;
    g.mode = Mode::Explicit;
    g.entries = std::move(m);
    size_t n = g.entries.size();
    for (auto& row : g.entries)
        if (row.size() != n) throw Error("gram matrix is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!(g.entries[i][j] == g.entries[j][i])) throw Error("gram matrix is not symmetric");
    return g;
}

std::string GramSpec::key() const {
    switch (mode) {
        case Mode::Identity:
            return "id";
        case Mode::Symbolic:
            return "sym";
        case Mode::Explicit: {
            std::string s = "ex";
            for (auto& row : entries)
                for (auto& e : row) s += ":" + e.str();
            return s;
        }
    }
    return "?";
}

BnElement bn_unit(int n) {
    return {CommPoly::one(), std::vector<CommPoly>(static_cast<size_t>(n))};
}

GramTable::GramTable(int n, const GramSpec& spec, IndetTable& indets) : n_(n) {
    if (n < 1) throw Error("Bn needs n >= 1");
    if (spec.mode == GramSpec::Mode::Explicit &&
        spec.entries.size() != static_cast<size_t>(n))
        throw Error("gram matrix dimension mismatch");
    g_.assign(static_cast<size_t>(n), std::vector<CommPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            CommPoly e;
            switch (spec.mode) {
                case GramSpec::Mode::Identity:
                    e = i == j ? CommPoly::one() : CommPoly{};
                    break;
                case GramSpec::Mode::Explicit:
                    e = CommPoly::constant(spec.entries[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                    break;
                case GramSpec::Mode::Symbolic:
                    e = CommPoly::indet(indets.id("g" + std::to_string(i + 1) + "_" + std::to_string(j + 1)));
                    break;
            }
            g_[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
            g_[static_cast<size_t>(j)][static_cast<size_t>(i)] = e;
        }
}

BnElement bn_mul(const BnElement& x, const BnElement& y, const GramTable& gram) {
    int n = gram.n();
    BnElement r;
    r.scalar = x.scalar * y.scalar;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CommPoly t = x.vec[static_cast<size_t>(i)] * y.vec[static_cast<size_t>(j)];
            if (!t.is_zero()) r.scalar += t * gram.at(i, j);
        }
    r.vec.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        r.vec[static_cast<size_t>(i)] =
            x.scalar * y.vec[static_cast<size_t>(i)] + y.scalar * x.vec[static_cast<size_t>(i)];
    return r;
}

namespace {

void check_graded_j2(VarName v, const J2Element& e) {
    if (v.is_placeholder()) throw Error("placeholder variable " + v.str() + " in evaluation");
    if (v.parity() == 0) {
        if (!e.cB.is_zero())
            throw Error("parity violation: even variable " + v.str() + " assigned an odd part");
    } else if (!e.cI.is_zero() || !e.cA.is_zero()) {
        throw Error("parity violation: odd variable " + v.str() + " assigned an even part");
    }
}

void check_graded_bn(VarName v, const BnElement& e, int n) {
    if (v.is_placeholder()) throw Error("placeholder variable " + v.str() + " in evaluation");
    if (e.vec.size() != static_cast<size_t>(n)) throw Error("vector dimension mismatch");
    if (v.parity() == 0) {
        for (auto& c : e.vec)
            if (!c.is_zero())
                throw Error("parity violation: even variable " + v.str() + " assigned a vector part");
    } else if (!e.scalar.is_zero()) {
        throw Error("parity violation: odd variable " + v.str() + " assigned a scalar part");
    }
}

J2Element eval_tree_j2(const Monomial& m, const std::map<VarName, J2Element>& assign) {
    if (m.is_unit()) return j2_unit();
    if (m.is_var()) {
        auto it = assign.find(m.leaf());
        if (it == assign.end()) throw Error("unassigned variable " + m.leaf().str());
        return it->second;
    }
    return j2_mul(eval_tree_j2(m.left(), assign), eval_tree_j2(m.right(), assign));
}

BnElement eval_tree_bn(const Monomial& m, const GramTable& gram,
                       const std::map<VarName, BnElement>& assign) {
    if (m.is_unit()) return bn_unit(gram.n());
    if (m.is_var()) {
        auto it = assign.find(m.leaf());
        if (it == assign.end()) throw Error("unassigned variable " + m.leaf().str());
        return it->second;
    }
    return bn_mul(eval_tree_bn(m.left(), gram, assign), eval_tree_bn(m.right(), gram, assign),
                  gram);
}

}  // namespace

J2Element eval_j2(const JordanPoly& p, const std::map<VarName, J2Element>& assign) {
    for (auto& [v, e] : assign) check_graded_j2(v, e);
    J2Element acc;
    for (auto& [m, c] : p.terms()) {
        J2Element t = eval_tree_j2(m, assign);
        acc.cI += t.cI * c;
        acc.cA += t.cA * c;
        acc.cB += t.cB * c;
    }
    return acc;
}

BnElement eval_bn(const JordanPoly& p, int n, const GramTable& gram,
                  const std::map<VarName, BnElement>& assign) {
    for (auto& [v, e] : assign) check_graded_bn(v, e, n);
    BnElement acc{CommPoly{}, std::vector<CommPoly>(static_cast<size_t>(n))};
    for (auto& [m, c] : p.terms()) {
        BnElement t = eval_tree_bn(m, gram, assign);
        acc.scalar += t.scalar * c;
        for (int i = 0; i < n; ++i)
            acc.vec[static_cast<size_t>(i)] += t.vec[static_cast<size_t>(i)] * c;
    }
    return acc;
}

std::set<VarName> variables_of(const JordanPoly& p) {
    std::set<VarName> vars;
    for (auto& [m, c] : p.terms()) {
        MultiDegree d = m.multidegree();
        for (auto& [v, e] : d.exponents()) vars.insert(v);
    }
    return vars;
}

J2Generic j2_generic(const std::set<VarName>& vars) {
    J2Generic g;
    for (VarName v : vars) {
        if (v.is_placeholder()) throw Error("placeholder variable " + v.str() + " in evaluation");
        J2Element e;
        if (v.parity() == 0) {
            e.cI = CommPoly::indet(g.indets.id("alpha" + std::to_string(v.index)));
            e.cA = CommPoly::indet(g.indets.id("beta" + std::to_string(v.index)));
        } else {
            e.cB = CommPoly::indet(g.indets.id("gamma" + std::to_string(v.index)));
        }
        g.assign.emplace(v, e);
    }
    return g;
}

BnGeneric bn_generic(int n, const GramSpec& spec, const std::set<VarName>& vars) {
    BnGeneric g;
    for (VarName v : vars) {
        if (v.is_placeholder()) throw Error("placeholder variable " + v.str() + " in evaluation");
        BnElement e;
        e.vec.resize(static_cast<size_t>(n));
        if (v.parity() == 0) {
            e.scalar = CommPoly::indet(g.indets.id("alpha" + std::to_string(v.index)));
        } else {
            for (int i = 0; i < n; ++i)
                e.vec[static_cast<size_t>(i)] = CommPoly::indet(
                    g.indets.id("v" + std::to_string(v.index) + "_" + std::to_string(i + 1)));
        }
        g.assign.emplace(v, e);
    }
    g.gram.emplace(n, spec, g.indets);
    return g;
}

bool is_graded_identity_j2_nonscalar(const JordanPoly& p) {
    if (!fully_graded(p)) throw Error("placeholder variables must be instantiated first");
    J2Generic g = j2_generic(variables_of(p));
    return eval_j2(p, g.assign).is_zero();
}

bool is_graded_identity_bn_scalar(const JordanPoly& p, int n, const GramSpec& gram) {
    if (!fully_graded(p)) throw Error("placeholder variables must be instantiated first");
    BnGeneric g = bn_generic(n, gram, variables_of(p));
    return eval_bn(p, n, *g.gram, g.assign).is_zero();
}

bool is_weak_identity_bn(const JordanPoly& p, int n, const GramSpec& gram) {
    for (VarName v : variables_of(p))
        if (v.is_placeholder() || v.parity() == 0)
            throw Error("weak identity input must use odd variables only (got " + v.str() + ")");
    return is_graded_identity_bn_scalar(p, n, gram);
}

namespace {

// Deterministic search for a non-vanishing point of a tuple of polynomials:
// odometer over a small value set first, then a seeded LCG fallback.
std::optional<std::vector<Rat>> nonvanishing_point(const std::vector<const CommPoly*>& polys,
                                                   int nindets) {
    static const int values[] = {0, 1, -1, 2, -2};
    constexpr long kOdometerCap = 200000;
    auto nonzero_at = [&](const std::vector<Rat>& pt) {
        for (auto* q : polys)
            if (!q->eval(pt).is_zero()) return true;
        return false;
    };
    std::vector<int> state(static_cast<size_t>(nindets), 0);
    std::vector<Rat> pt(static_cast<size_t>(nindets), Rat(0));
    long steps = 0;
    for (;;) {
        if (nonzero_at(pt)) return pt;
        if (++steps > kOdometerCap) break;
        size_t k = 0;
        while (k < state.size() && state[k] == 4) {
            state[k] = 0;
            pt[k] = Rat(values[0]);
            ++k;
        }
        if (k == state.size()) break;  // odometer exhausted
        ++state[k];
        pt[k] = Rat(values[state[k]]);
    }
    uint64_t s = 0x9e3779b97f4a7c15ull;
    for (int round = 0; round < 20000; ++round) {
        for (size_t k = 0; k < pt.size(); ++k) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            pt[k] = Rat(static_cast<long>((s >> 33) % 41) - 20);
        }
        if (nonzero_at(pt)) return pt;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> find_witness_j2(const JordanPoly& p) {
    J2Generic g = j2_generic(variables_of(p));
    J2Element v = eval_j2(p, g.assign);
    if (v.is_zero()) return std::nullopt;
    auto pt = nonvanishing_point({&v.cI, &v.cA, &v.cB}, g.indets.size());
    if (!pt) return std::nullopt;
    Witness w;
    for (auto& [var, e] : g.assign) {
        std::vector<Rat> coords(3, Rat(0));
        if (var.parity() == 0) {
            coords[0] = e.cI.eval(*pt);
            coords[1] = e.cA.eval(*pt);
        } else {
            coords[2] = e.cB.eval(*pt);
        }
        w.assignment.emplace_back(var.str(), coords);
    }
    const char* names[] = {"I", "a", "b"};
    const CommPoly* cs[] = {&v.cI, &v.cA, &v.cB};
    for (int i = 0; i < 3; ++i) {
        Rat val = cs[i]->eval(*pt);
        if (!val.is_zero()) w.value.emplace_back(names[i], val);
    }
    return w;
}

std::optional<Witness> find_witness_bn(const JordanPoly& p, int n, const GramSpec& gram,
                                       bool weak) {
    if (weak) {
        for (VarName v : variables_of(p))
            if (v.is_placeholder() || v.parity() == 0)
                throw Error("weak identity input must use odd variables only");
    }
    BnGeneric g = bn_generic(n, gram, variables_of(p));
    BnElement v = eval_bn(p, n, *g.gram, g.assign);
    if (v.is_zero()) return std::nullopt;
    std::vector<const CommPoly*> polys{&v.scalar};
    for (auto& c : v.vec) polys.push_back(&c);
    auto pt = nonvanishing_point(polys, g.indets.size());
    if (!pt) return std::nullopt;
    Witness w;
    for (auto& [var, e] : g.assign) {
        std::vector<Rat> coords;
        coords.push_back(e.scalar.eval(*pt));
        for (auto& c : e.vec) coords.push_back(c.eval(*pt));
        w.assignment.emplace_back(var.str(), coords);
    }
    Rat sv = v.scalar.eval(*pt);
    if (!sv.is_zero()) w.value.emplace_back("scalar", sv);
    for (int i = 0; i < n; ++i) {
        Rat cv = v.vec[static_cast<size_t>(i)].eval(*pt);
        if (!cv.is_zero()) w.value.emplace_back("v" + std::to_string(i + 1), cv);
    }
    if (gram.mode == GramSpec::Mode::Symbolic)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                std::string nm = "g" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
                w.assignment.emplace_back(
                    nm, std::vector<Rat>{pt->at(static_cast<size_t>(g.indets.id(nm)))});
            }
    return w;
}

}  // namespace jgpi
