#pragma once

#include <map>
#include <string>
#include <vector>

#include "jgpi/rational.hpp"

namespace jgpi {

/// Names the scalar indeterminates of a generic evaluation. Ids are dense
/// and allocated in first-request order, so a fixed allocation schedule
/// gives reproducible output.
class IndetTable {
  public:
    int id(const std::string& name) {
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        int i = static_cast<int>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, i);
        return i;
    }
    const std::string& name(int i) const { return names_.at(i); }
    int size() const { return static_cast<int>(names_.size()); }

  private:
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
};

/// Sparse exponent vector: (indeterminate id, exponent>0), sorted by id.
using Expo = std::vector<std::pair<int, int>>;

/// Multivariate commutative polynomial over Q in countably many scalar
/// indeterminates; canonical sparse form, zero iff no terms.
class CommPoly {
  public:
    CommPoly() = default;

    static CommPoly constant(const Rat& c) {
        CommPoly p;
        p.add_term({}, c);
        return p;
    }
    static CommPoly one() { return constant(Rat(1)); }
    static CommPoly indet(int id) {
        CommPoly p;
        p.add_term({{id, 1}}, Rat(1));
        return p;
    }

    void add_term(const Expo& e, const Rat& c) {
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    bool is_zero() const { return t_.empty(); }
    size_t num_terms() const { return t_.size(); }
    const std::map<Expo, Rat>& terms() const { return t_; }

    CommPoly& operator+=(const CommPoly& o) {
        for (auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    CommPoly& operator-=(const CommPoly& o) {
        for (auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    CommPoly& operator*=(const Rat& c) {
        if (c.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto& [e, v] : t_) v *= c;
        return *this;
    }

    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(CommPoly a, const Rat& c) { return a *= c; }
    friend CommPoly operator*(const Rat& c, CommPoly a) { return a *= c; }
    CommPoly operator-() const { return *this * Rat(-1); }

    friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
        CommPoly r;
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) r.add_term(mul_expo(ea, eb), ca * cb);
        return r;
    }

    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.t_ == b.t_; }

    /// Substitutes rational values (indexed by indeterminate id).
    Rat eval(const std::vector<Rat>& values) const;

    std::string str(const IndetTable& names) const;

  private:
    static Expo mul_expo(const Expo& a, const Expo& b);

    std::map<Expo, Rat> t_;
};

}  // namespace jgpi
