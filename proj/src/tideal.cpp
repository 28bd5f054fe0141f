#include "jgpi/tideal.hpp"

#include <algorithm>

#include "jgpi/expr.hpp"
#include "jgpi/tableaux.hpp"

namespace jgpi {

namespace {

constexpr int kAugBase = 1 << 28;  // augmented coordinates for kernel tracking

std::string dkey(const MultiDegree& d) { return d.str(); }

JordanPoly pvar(VarName v) { return JordanPoly::of_var(v); }

// minimal total degree of any context-free instance
int min_gen_total(const GenSpec& gens) {
    return gens.id == GenSpec::Id::JordanOnly ? 4 : 3;
}

std::vector<VarName> sorted_vars(const JordanPoly& p) {
    auto s = variables_of(p);
    return {s.begin(), s.end()};
}

GenTemplate make_template(JordanPoly p, int sym_prefix, std::string label) {
    GenTemplate t;
    t.slots = sorted_vars(p);
    t.poly = std::move(p);
    t.sym_prefix = sym_prefix;
    t.label = std::move(label);
    return t;
}

// Instantiates the placeholders of a template polynomial with the given
// parities, using fresh even/odd indices above those already present.
JordanPoly assign_parities(const JordanPoly& p, const std::vector<int>& parities) {
    int next_even = 1, next_odd = 1;
    std::vector<VarName> placeholders;
    for (VarName v : variables_of(p)) {
        if (v.is_placeholder())
            placeholders.push_back(v);
        else if (v.parity() == 0)
            next_even = std::max(next_even, v.index + 1);
        else
            next_odd = std::max(next_odd, v.index + 1);
    }
    if (placeholders.size() != parities.size()) throw Error("parity pattern arity mismatch");
    Renaming r;
    for (size_t i = 0; i < placeholders.size(); ++i) {
        if (parities[i] == 0)
            r.emplace(placeholders[i], VarName::even(next_even++));
        else
            r.emplace(placeholders[i], VarName::odd(next_odd++));
    }
    return rename(p, r);
}

// All parity patterns for k placeholders, optionally filtered.
template <class Pred>
std::vector<std::vector<int>> parity_patterns(size_t k, Pred&& ok) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<int> p(k);
        for (size_t i = 0; i < k; ++i) p[i] = (mask >> i) & 1;
        if (ok(p)) out.push_back(p);
    }
    return out;
}

}  // namespace

std::string GenSpec::key() const {
    switch (id) {
        case Id::NonscalarJ2:
            return "nsj2";
        case Id::ScalarB:
            return "sb";
        case Id::ScalarBn:
            return "sbn" + std::to_string(n);
        case Id::JordanOnly:
            return "jord";
    }
    return "?";
}

std::string ModelSpec::key() const {
    if (kind == Kind::J2Nonscalar) return "j2ns";
    return "bn" + std::to_string(n) + ":" + gram.key();
}

const GenTemplate& jordan_linearized_template() {
    static const GenTemplate t = [] {
        JordanPoly x1 = pvar(VarName::placeholder(1));
        JordanPoly x2 = pvar(VarName::placeholder(2));
        JordanPoly x3 = pvar(VarName::placeholder(3));
        JordanPoly y = pvar(VarName::placeholder(4));
        JordanPoly lj;
        const JordanPoly* xs[] = {&x1, &x2, &x3};
        int splits[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
        for (auto& s : splits) {
            JordanPoly prod = *xs[s[0]] * *xs[s[1]];
            lj += (prod * y) * *xs[s[2]] - prod * (y * *xs[s[2]]);
        }
        return make_template(std::move(lj), 3, "jordan");
    }();
    return t;
}

std::vector<GenTemplate> concrete_generators(const GenSpec& gens) {
    std::vector<GenTemplate> out;
    auto add = [&](const std::string& text, const std::vector<std::vector<int>>& patterns,
                   const std::string& label) {
        JordanPoly tpl = to_poly(parse_expression(text));
        for (auto& pat : patterns) {
            JordanPoly inst = assign_parities(tpl, pat);
            if (inst.is_zero()) continue;
            std::string lab = label;
            for (int b : pat) lab += b ? 'z' : 'y';
            out.push_back(make_template(std::move(inst), 0, lab));
        }
    };
    auto all = [](const std::vector<int>&) { return true; };
    switch (gens.id) {
        case GenSpec::Id::JordanOnly:
            break;
        case GenSpec::Id::NonscalarJ2:
            // (1): x1(x2 x3) - x2(x1 x3) with |x1| = |x2|
            add("x1*(x2*x3) - x2*(x1*x3)",
                parity_patterns(3, [](const std::vector<int>& p) { return p[0] == p[1]; }),
                "one.");
            // (2)
            add("(y1*y2,z1,z2) - y1*(y2,z1,z2) - y2*(y1,z1,z2) + 2*(z1*(z2,y1,y2))", {{}},
                "two");
            // (3)
            add("(y1*y2,y3,z1) - y1*(y2,y3,z1) - y2*(y1,y3,z1)", {{}}, "three");
            // (4): (z1 z2, x1, x2)
            add("(z1*z2,x1,x2)", parity_patterns(2, all), "four.");
            // (5): (y1,y2,z1,x,y3) - (y1,y3,z1,x,y2)
            add("(y1,y2,z1,x1,y3) - (y1,y3,z1,x1,y2)", parity_patterns(1, all), "five.");
            break;
        case GenSpec::Id::ScalarB:
            add("(y1,x1,x2)", parity_patterns(2, all), "six.");
            break;
        case GenSpec::Id::ScalarBn: {
            if (gens.n < 1) throw Error("scalar-bn needs n >= 1");
            add("(y1,x1,x2)", parity_patterns(2, all), "six.");
            JordanPoly gn = build_gn(gens.n);
            out.push_back(make_template(std::move(gn), 0, "g" + std::to_string(gens.n)));
            break;
        }
    }
    return out;
}

void Engine::instances_into(const GenTemplate& g, const MultiDegree& d, const FreeComponent& fc,
                            RowSpace& rs) {
    size_t k = g.slots.size();
    std::vector<MultiDegree> parts(k);
    std::vector<Monomial> chosen(k);
    std::map<VarName, Monomial> assign;

    // choose monomials for slots [i..k) once parts are fixed
    auto pick = [&](auto&& self, size_t i) -> void {
        if (i == k) {
            for (size_t j = 0; j < k; ++j) assign[g.slots[j]] = chosen[j];
            JordanPoly inst = substitute(g.poly, assign);
            if (!inst.is_zero()) rs.insert(fc.vec(inst));
            return;
        }
        for (const Monomial& m : enumerate_monomials(parts[i])) {
            if (static_cast<int>(i) > 0 && static_cast<int>(i) < g.sym_prefix &&
                parts[i] == parts[i - 1] && Monomial::cmp(m, chosen[i - 1]) < 0)
                continue;
            chosen[i] = m;
            self(self, i + 1);
        }
    };

    auto split = [&](auto&& self, size_t i, const MultiDegree& remaining) -> void {
        if (i + 1 == k) {
            VarName slot = g.slots[i];
            bool empty_ok = slot.is_placeholder() || slot.parity() == 0;
            if (remaining.empty() && !empty_ok) return;
            if (!remaining.empty() && !slot.is_placeholder() &&
                remaining.parity() != slot.parity())
                return;
            if (static_cast<int>(i) > 0 && static_cast<int>(i) < g.sym_prefix &&
                remaining < parts[i - 1])
                return;
            parts[i] = remaining;
            pick(pick, 0);
            return;
        }
        VarName slot = g.slots[i];
        bool empty_ok = slot.is_placeholder() || slot.parity() == 0;
        remaining.for_each_sub([&](const MultiDegree& part) {
            if (part.empty() && !empty_ok) return;
            if (!part.empty() && !slot.is_placeholder() && part.parity() != slot.parity()) return;
            if (static_cast<int>(i) > 0 && static_cast<int>(i) < g.sym_prefix &&
                part < parts[i - 1])
                return;
            parts[i] = part;
            self(self, i + 1, remaining - part);
        });
    };
    split(split, 0, d);
}

std::shared_ptr<const RowSpace> Engine::rows_canonical(const GenSpec& gens,
                                                       const MultiDegree& d) {
    std::string key = gens.key() + "|" + dkey(d);
    {
        std::lock_guard lock(mu_);
        auto it = ideal_cache_.find(key);
        if (it != ideal_cache_.end()) return it->second;
    }

    FreeComponent fc(d);
    auto rs = std::make_shared<RowSpace>();

    if (d.total() >= min_gen_total(gens)) {
        // context-free instances landing exactly in d
        instances_into(jordan_linearized_template(), d, fc, *rs);
        for (const GenTemplate& g : concrete_generators(gens)) instances_into(g, d, fc, *rs);

        // one-hole contexts: peel the outermost multiplication
        d.for_each_sub([&](const MultiDegree& e) {
            if (e.empty() || e == d) return;
            MultiDegree rest = d - e;
            if (rest.total() < min_gen_total(gens)) return;
            std::vector<JordanPoly> sub = ideal_row_polys(gens, rest);
            if (sub.empty()) return;
            for (const Monomial& m : enumerate_monomials(e)) {
                JordanPoly mm = JordanPoly::of_monomial(m);
                for (const JordanPoly& q : sub) rs->insert(fc.vec(q * mm));
            }
        });
    }

    std::lock_guard lock(mu_);
    auto [it, inserted] = ideal_cache_.emplace(key, rs);
    return it->second;
}

std::shared_ptr<const RowSpace> Engine::ideal_rows(const GenSpec& gens, const MultiDegree& d) {
    check_degree(d);
    auto [dc, ren] = canonical_multidegree(d);
    if (dc != d) throw Error("ideal_rows requires a canonical multidegree");
    return rows_canonical(gens, d);
}

std::vector<JordanPoly> Engine::ideal_row_polys(const GenSpec& gens, const MultiDegree& d) {
    check_degree(d);
    auto [dc, ren] = canonical_multidegree(d);
    auto rs = rows_canonical(gens, dc);
    FreeComponent fc(dc);
    Renaming back = inverse(ren);
    std::vector<JordanPoly> out;
    out.reserve(static_cast<size_t>(rs->rank()));
    for (const SparseVec& row : rs->sorted_rows()) out.push_back(rename(fc.poly(row), back));
    return out;
}

bool Engine::is_member(const JordanPoly& p, const GenSpec& gens) {
    for (auto& [d, comp] : multihomogeneous_components(p)) {
        check_degree(d);
        auto [dc, ren] = canonical_multidegree(d);
        auto rs = rows_canonical(gens, dc);
        FreeComponent fc(dc);
        if (!rs->contains(fc.vec(rename(comp, ren)))) return false;
    }
    return true;
}

JordanPoly Engine::reduce_mod_ideal(const JordanPoly& p, const GenSpec& gens) {
    auto d = multidegree_of(p);
    if (!d) throw Error("reduce_mod_ideal needs a multihomogeneous polynomial");
    if (p.is_zero()) return p;
    check_degree(*d);
    auto [dc, ren] = canonical_multidegree(*d);
    auto rs = rows_canonical(gens, dc);
    FreeComponent fc(dc);
    return rename(fc.poly(rs->reduce(fc.vec(rename(p, ren)))), inverse(ren));
}

std::shared_ptr<const Engine::EvalData> Engine::eval_data(const ModelSpec& model,
                                                          const MultiDegree& d) {
    check_degree(d);
    std::string key = model.key() + "|" + dkey(d);
    {
        std::lock_guard lock(mu_);
        auto it = eval_cache_.find(key);
        if (it != eval_cache_.end()) return it->second;
    }

    FreeComponent fc(d);
    std::set<VarName> vars;
    for (auto& [v, e] : d.exponents()) vars.insert(v);

    auto data = std::make_shared<EvalData>();
    data->rows.resize(static_cast<size_t>(fc.dim()));
    std::map<std::pair<int, Expo>, int> colids;
    auto col = [&](int coord, const Expo& e) {
        auto it = colids.find({coord, e});
        if (it != colids.end()) return it->second;
        int id = static_cast<int>(colids.size());
        colids.emplace(std::make_pair(coord, e), id);
        return id;
    };
    auto flatten = [&](std::vector<const CommPoly*> coords, size_t row) {
        SparseVec v;
        for (size_t c = 0; c < coords.size(); ++c)
            for (auto& [e, val] : coords[c]->terms())
                v.emplace_back(col(static_cast<int>(c), e), val);
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        data->rows[row] = std::move(v);
    };

    if (model.kind == ModelSpec::Kind::J2Nonscalar) {
        J2Generic g = j2_generic(vars);
        std::map<Monomial, J2Element, MonoLess> memo;
        auto ev = [&](auto&& self, const Monomial& m) -> const J2Element& {
            auto it = memo.find(m);
            if (it != memo.end()) return it->second;
            J2Element r;
            if (m.is_unit())
                r = j2_unit();
            else if (m.is_var())
                r = g.assign.at(m.leaf());
            else
                r = j2_mul(self(self, m.left()), self(self, m.right()));
            return memo.emplace(m, std::move(r)).first->second;
        };
        for (int i = 0; i < fc.dim(); ++i) {
            const J2Element& e = ev(ev, fc.monomial(i));
            flatten({&e.cI, &e.cA, &e.cB}, static_cast<size_t>(i));
        }
    } else {
        BnGeneric g = bn_generic(model.n, model.gram, vars);
        std::map<Monomial, BnElement, MonoLess> memo;
        auto ev = [&](auto&& self, const Monomial& m) -> const BnElement& {
            auto it = memo.find(m);
            if (it != memo.end()) return it->second;
            BnElement r;
            if (m.is_unit())
                r = bn_unit(model.n);
            else if (m.is_var())
                r = g.assign.at(m.leaf());
            else
                r = bn_mul(self(self, m.left()), self(self, m.right()), *g.gram);
            return memo.emplace(m, std::move(r)).first->second;
        };
        for (int i = 0; i < fc.dim(); ++i) {
            const BnElement& e = ev(ev, fc.monomial(i));
            std::vector<const CommPoly*> coords{&e.scalar};
            for (auto& c : e.vec) coords.push_back(&c);
            flatten(std::move(coords), static_cast<size_t>(i));
        }
    }

    RowSpace rs;
    for (auto& row : data->rows) rs.insert(row);
    data->rank = rs.rank();

    std::lock_guard lock(mu_);
    auto [it, inserted] = eval_cache_.emplace(key, data);
    return it->second;
}

std::vector<JordanPoly> Engine::identity_kernel(const ModelSpec& model, const MultiDegree& d) {
    check_degree(d);
    auto [dc, ren] = canonical_multidegree(d);
    auto data = eval_data(model, dc);
    FreeComponent fc(dc);
    Renaming back = inverse(ren);

    RowSpace rs(kAugBase);
    std::vector<JordanPoly> kernel;
    for (int i = 0; i < fc.dim(); ++i) {
        SparseVec row = data->rows[static_cast<size_t>(i)];
        row.emplace_back(kAugBase + i, Rat(1));
        SparseVec r = rs.reduce(std::move(row));
        if (r.empty() || r[0].first >= kAugBase) {
            JordanPoly q;
            for (auto& [c, x] : r) q.add_term(fc.monomial(c - kAugBase), x);
            kernel.push_back(rename(q, back));
        } else {
            rs.adopt(std::move(r));
        }
    }
    return kernel;
}

int Engine::identity_dim(const ModelSpec& model, const MultiDegree& d) {
    check_degree(d);
    auto [dc, ren] = canonical_multidegree(d);
    auto data = eval_data(model, dc);
    int jordan = rows_canonical(GenSpec::jordan_only(), dc)->rank();
    return static_cast<int>(FreeComponent(dc).dim()) - data->rank - jordan;
}

int Engine::free_jordan_dim(const MultiDegree& d) {
    check_degree(d);
    auto [dc, ren] = canonical_multidegree(d);
    return static_cast<int>(FreeComponent(dc).dim()) -
           rows_canonical(GenSpec::jordan_only(), dc)->rank();
}

CompareReport Engine::compare(const GenSpec& gens, const ModelSpec& model,
                              const MultiDegree& d) {
    check_degree(d);
    auto [dc, ren] = canonical_multidegree(d);
    FreeComponent fc(dc);

    CompareReport rep;
    rep.degree = dc;
    rep.dim_free_nonassoc = fc.dim();

    auto ideal = rows_canonical(gens, dc);
    auto eval = eval_data(model, dc);
    int jordan = rows_canonical(GenSpec::jordan_only(), dc)->rank();
    rep.dim_free_jordan = fc.dim() - jordan;
    rep.dim_ideal = ideal->rank() - jordan;
    rep.dim_identities = fc.dim() - eval->rank - jordan;

    // soundness: every ideal row is a graded identity of the model
    rep.sound = true;
    for (const SparseVec& row : ideal->sorted_rows()) {
        SparseVec img;
        for (auto& [mono, c] : row) img = axpy(img, c, eval->rows[static_cast<size_t>(mono)]);
        if (!img.empty()) {
            rep.sound = false;
            rep.equal = false;
            rep.counterexample = rename(fc.poly(row), inverse(ren));
            return rep;
        }
    }

    rep.equal = (ideal->rank() + eval->rank == fc.dim());
    if (!rep.equal) {
        // exhibit an identity outside the ideal
        for (const JordanPoly& q : identity_kernel(model, dc)) {
            if (!ideal->contains(fc.vec(q))) {
                rep.counterexample = rename(q, inverse(ren));
                break;
            }
        }
    }
    return rep;
}

ComponentBasis Engine::component_basis(const MultiDegree& d, Modulus modulus,
                                       const GenSpec* gens) {
    check_degree(d);
    ComponentBasis cb;
    cb.degree = d;
    cb.modulus = modulus;
    FreeComponent fc(d);
    cb.monomials = fc.monomials();
    if (modulus == Modulus::FreeNonassoc) {
        cb.basis = cb.monomials;
        return cb;
    }
    GenSpec g = GenSpec::jordan_only();
    if (modulus == Modulus::RelFreeL) {
        if (!gens) throw Error("relatively-free component needs a generator set");
        g = *gens;
    }
    auto [dc, ren] = canonical_multidegree(d);
    RowSpace local;
    if (dc == d) {
        auto rs = rows_canonical(g, dc);
        cb.relation_rows = rs->sorted_rows();
        for (int i = 0; i < fc.dim(); ++i)
            if (!rs->is_pivot(i)) cb.basis.push_back(fc.monomial(i));
        return cb;
    }
    for (const JordanPoly& q : ideal_row_polys(g, d)) local.insert(fc.vec(q));
    cb.relation_rows = local.sorted_rows();
    for (int i = 0; i < fc.dim(); ++i)
        if (!local.is_pivot(i)) cb.basis.push_back(fc.monomial(i));
    return cb;
}

std::vector<MultiDegree> canonical_multidegrees(int max_total, int max_odd_vars) {
    // partitions of n in weakly decreasing order
    auto partitions = [](int n) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int left, int maxpart) -> void {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (int p = std::min(left, maxpart); p >= 1; --p) {
                cur.push_back(p);
                self(self, left - p, p);
                cur.pop_back();
            }
        };
        rec(rec, n, n);
        return out;
    };
    std::vector<MultiDegree> out;
    for (int total = 1; total <= max_total; ++total) {
        for (int even_part = total; even_part >= 0; --even_part) {
            int odd_part = total - even_part;
            for (auto& ep : partitions(even_part)) {
                for (auto& op : partitions(odd_part)) {
                    if (max_odd_vars >= 0 && static_cast<int>(op.size()) > max_odd_vars)
                        continue;
                    MultiDegree d;
                    for (size_t i = 0; i < ep.size(); ++i)
                        d.add(VarName::even(static_cast<int>(i) + 1), ep[i]);
                    for (size_t i = 0; i < op.size(); ++i)
                        d.add(VarName::odd(static_cast<int>(i) + 1), op[i]);
                    out.push_back(d);
                }
            }
        }
    }
    return out;
}

}  // namespace jgpi
