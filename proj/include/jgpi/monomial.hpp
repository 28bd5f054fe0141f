#pragma once

#include <memory>
#include <string>

#include "jgpi/variable.hpp"

namespace jgpi {

/// Canonical monomial of the free unitary commutative nonassociative
/// algebra: a binary product tree over variable leaves, empty tree = unit.
/// Canonical form: at every internal node the children are ordered by the
/// fixed total order (leaf count first, then recursive comparison), and
/// unit factors are absorbed. Immutable; subtrees are shared.
class Monomial {
  public:
    Monomial() = default;  // unit

    static Monomial var(VarName v) {
        return Monomial(std::make_shared<const Node>(Node{1, true, v, nullptr, nullptr}));
    }

    /// Canonical product. Both factors must already be canonical.
    static Monomial product(const Monomial& a, const Monomial& b) {
        if (a.is_unit()) return b;
        if (b.is_unit()) return a;
        if (cmp(a, b) <= 0)
            return Monomial(std::make_shared<const Node>(
                Node{a.n_->size + b.n_->size, false, VarName{}, a.n_, b.n_}));
        return Monomial(std::make_shared<const Node>(
            Node{a.n_->size + b.n_->size, false, VarName{}, b.n_, a.n_}));
    }

    bool is_unit() const { return n_ == nullptr; }
    bool is_var() const { return n_ && n_->is_leaf; }
    bool is_product() const { return n_ && !n_->is_leaf; }

    int degree() const { return n_ ? n_->size : 0; }

    VarName leaf() const {
        if (!is_var()) throw Error("monomial is not a variable");
        return n_->v;
    }
    Monomial left() const {
        if (!is_product()) throw Error("monomial is not a product");
        return Monomial(n_->l);
    }
    Monomial right() const {
        if (!is_product()) throw Error("monomial is not a product");
        return Monomial(n_->r);
    }

    MultiDegree multidegree() const {
        MultiDegree d;
        collect(n_.get(), d);
        return d;
    }

    /// Z2-degree: number of odd leaves mod 2.
    int parity() const { return parity_of(n_.get()); }

    /// Total order: degree first, then leaf-vs-node structure, then
    /// variables, recursing left-to-right. Any fixed order works; this one
    /// is cheap and deterministic.
    static int cmp(const Monomial& a, const Monomial& b) { return cmp_node(a.n_.get(), b.n_.get()); }

    friend bool operator==(const Monomial& a, const Monomial& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return cmp(a, b) != 0; }

    /// Fully parenthesized: "((y1*z1)*z2)"; "1" for the unit.
    std::string str() const {
        std::string s;
        print(n_.get(), s);
        return s;
    }

  private:
    struct Node {
        int size;
        bool is_leaf;
        VarName v;
        std::shared_ptr<const Node> l, r;
    };

    explicit Monomial(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

    static int cmp_node(const Node* a, const Node* b) {
        if (a == b) return 0;
        if (!a) return b ? -1 : 0;
        if (!b) return 1;
        if (a->size != b->size) return a->size < b->size ? -1 : 1;
        if (a->is_leaf) {
            if (a->v != b->v) return a->v < b->v ? -1 : 1;
            return 0;
        }
        if (int c = cmp_node(a->l.get(), b->l.get())) return c;
        return cmp_node(a->r.get(), b->r.get());
    }

    static void collect(const Node* n, MultiDegree& d) {
        if (!n) return;
        if (n->is_leaf) {
            d.add(n->v, 1);
            return;
        }
        collect(n->l.get(), d);
        collect(n->r.get(), d);
    }

    static int parity_of(const Node* n) {
        if (!n) return 0;
        if (n->is_leaf) return n->v.kind == VarName::Kind::Odd ? 1 : 0;
        return (parity_of(n->l.get()) + parity_of(n->r.get())) & 1;
    }

    static void print(const Node* n, std::string& s) {
        if (!n) {
            s += '1';
            return;
        }
        if (n->is_leaf) {
            s += n->v.str();
            return;
        }
        s += '(';
        print(n->l.get(), s);
        s += '*';
        print(n->r.get(), s);
        s += ')';
    }

    std::shared_ptr<const Node> n_;
};

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) < 0; }
};

}  // namespace jgpi
