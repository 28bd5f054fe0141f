#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "jgpi/rational.hpp"

namespace jgpi {

/// Graded variable: y<i> (even), z<i> (odd), or the ungraded placeholder
/// x<i>. Placeholders are only legal in generator templates; they are
/// instantiated to a parity before anything is evaluated.
struct VarName {
    enum class Kind : uint8_t { Even = 0, Odd = 1, Placeholder = 2 };

    Kind kind{Kind::Even};
    int index{1};

    static VarName even(int i) { return {Kind::Even, i}; }
    static VarName odd(int i) { return {Kind::Odd, i}; }
    static VarName placeholder(int i) { return {Kind::Placeholder, i}; }

    bool is_placeholder() const { return kind == Kind::Placeholder; }

    /// 0 for even, 1 for odd; placeholders have no parity.
    int parity() const {
        if (is_placeholder()) throw Error("placeholder variable has no parity");
        return kind == Kind::Odd ? 1 : 0;
    }

    std::string str() const {
        static const char* letter[] = {"y", "z", "x"};
        return letter[static_cast<int>(kind)] + std::to_string(index);
    }

    friend auto operator<=>(const VarName&, const VarName&) = default;
};

/// Exponent vector: degree per variable, total degree and Z2-parity derived.
class MultiDegree {
  public:
    MultiDegree() = default;

    static MultiDegree of_var(VarName v, int e = 1) {
        MultiDegree d;
        d.add(v, e);
        return d;
    }

    void add(VarName v, int e) {
        if (e == 0) return;
        auto it = e_.find(v);
        if (it == e_.end()) {
            if (e < 0) throw Error("negative exponent");
            e_.emplace(v, e);
        } else {
            it->second += e;
            if (it->second < 0) throw Error("negative exponent");
            if (it->second == 0) e_.erase(it);
        }
    }

    int exponent(VarName v) const {
        auto it = e_.find(v);
        return it == e_.end() ? 0 : it->second;
    }

    int total() const {
        int t = 0;
        for (auto& [v, e] : e_) t += e;
        return t;
    }

    /// Sum of odd-variable multiplicities mod 2.
    int parity() const {
        int p = 0;
        for (auto& [v, e] : e_)
            if (v.parity() == 1) p += e;
        return p & 1;
    }

    bool empty() const { return e_.empty(); }
    size_t num_vars() const { return e_.size(); }

    bool contains(const MultiDegree& o) const {
        for (auto& [v, e] : o.e_)
            if (exponent(v) < e) return false;
        return true;
    }

    MultiDegree operator+(const MultiDegree& o) const {
        MultiDegree r = *this;
        for (auto& [v, e] : o.e_) r.add(v, e);
        return r;
    }

    MultiDegree operator-(const MultiDegree& o) const {
        MultiDegree r = *this;
        for (auto& [v, e] : o.e_) r.add(v, -e);
        return r;
    }

    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

    const std::map<VarName, int>& exponents() const { return e_; }

    /// "y1^2 y2 z1" style; "1" for the empty multidegree.
    std::string str() const {
        if (e_.empty()) return "1";
        std::string s;
        for (auto& [v, e] : e_) {
            if (!s.empty()) s += ' ';
            s += v.str();
            if (e > 1) s += '^' + std::to_string(e);
        }
        return s;
    }

    /// Enumerates all sub-multidegrees e with 0 <= e <= *this componentwise
    /// (including empty and full), in a fixed deterministic order.
    template <class F>
    void for_each_sub(F&& f) const {
        std::vector<std::pair<VarName, int>> vars(e_.begin(), e_.end());
        MultiDegree cur;
        sub_rec(vars, 0, cur, f);
    }

  private:
    template <class F>
    static void sub_rec(const std::vector<std::pair<VarName, int>>& vars, size_t i,
                        MultiDegree& cur, F&& f) {
        if (i == vars.size()) {
            f(cur);
            return;
        }
        for (int e = 0; e <= vars[i].second; ++e) {
            if (e > 0) cur.add(vars[i].first, 1);
            sub_rec(vars, i + 1, cur, f);
        }
        cur.add(vars[i].first, -vars[i].second);
    }

    std::map<VarName, int> e_;
};

/// Parity-preserving renaming of variables.
using Renaming = std::map<VarName, VarName>;

/// Canonical relabeling of a multidegree: even variables sorted by
/// (exponent desc, index asc) become y1,y2,...; odd likewise z1,z2,...
/// Returns the canonical multidegree and the renaming old->new.
std::pair<MultiDegree, Renaming> canonical_multidegree(const MultiDegree& d);

inline Renaming inverse(const Renaming& r) {
    Renaming inv;
    for (auto& [a, b] : r) inv.emplace(b, a);
    return inv;
}

}  // namespace jgpi
