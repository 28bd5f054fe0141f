#include "jgpi/component.hpp"

#include <algorithm>
#include <mutex>

namespace jgpi {

namespace {

// Unordered splits d = d1 + d2 with both parts nonzero, each yielded once.
// Ties (d1 == d2) are flagged so the caller can avoid duplicate pairs.
template <class F>
void for_each_split(const MultiDegree& d, F&& f) {
    d.for_each_sub([&](const MultiDegree& d1) {
        if (d1.empty() || d1 == d) return;
        MultiDegree d2 = d - d1;
        if (d2 < d1) return;  // keep d1 <= d2
        f(d1, d2, d1 == d2);
    });
}

void enumerate_rec(const MultiDegree& d, std::vector<Monomial>& out);

std::map<MultiDegree, std::vector<Monomial>>& mono_cache() {
    static std::map<MultiDegree, std::vector<Monomial>> cache;
    return cache;
}

std::recursive_mutex& mono_mutex() {
    static std::recursive_mutex mu;
    return mu;
}

// node references in the cache stay valid across inserts
const std::vector<Monomial>& monomials_cached(const MultiDegree& d) {
    std::lock_guard<std::recursive_mutex> lock(mono_mutex());
    auto& cache = mono_cache();
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<Monomial> out;
    enumerate_rec(d, out);
    return cache.emplace(d, std::move(out)).first->second;
}

void enumerate_rec(const MultiDegree& d, std::vector<Monomial>& out) {
    int n = d.total();
    if (n == 0) {
        out.push_back(Monomial{});
        return;
    }
    if (n == 1) {
        out.push_back(Monomial::var(d.exponents().begin()->first));
        return;
    }
    for_each_split(d, [&](const MultiDegree& d1, const MultiDegree& d2, bool tie) {
        const auto& a = monomials_cached(d1);
        const auto& b = monomials_cached(d2);
        if (tie) {
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = i; j < b.size(); ++j) out.push_back(Monomial::product(a[i], b[j]));
        } else {
            for (auto& m1 : a)
                for (auto& m2 : b) out.push_back(Monomial::product(m1, m2));
        }
    });
    std::sort(out.begin(), out.end(), MonoLess{});
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const MultiDegree& d) { return monomials_cached(d); }

long count_monomials(const MultiDegree& d) {
    return static_cast<long>(monomials_cached(d).size());
}

FreeComponent::FreeComponent(const MultiDegree& d) : d_(d), mons_(enumerate_monomials(d)) {
    for (size_t i = 0; i < mons_.size(); ++i) idx_.emplace(mons_[i], static_cast<int>(i));
}

int FreeComponent::index(const Monomial& m) const {
    auto it = idx_.find(m);
    if (it == idx_.end()) throw Error("monomial " + m.str() + " not in component " + d_.str());
    return it->second;
}

SparseVec FreeComponent::vec(const JordanPoly& p) const {
    SparseVec v;
    v.reserve(p.num_terms());
    for (auto& [m, c] : p.terms()) v.emplace_back(index(m), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

JordanPoly FreeComponent::poly(const SparseVec& v) const {
    JordanPoly p;
    for (auto& [i, c] : v) p.add_term(monomial(i), c);
    return p;
}

}  // namespace jgpi
