#include "jgpi/expr.hpp"

#include <cctype>

namespace jgpi {

ExprPtr Expr::make_var(VarName v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Var;
    e->var = v;
    return e;
}
ExprPtr Expr::make_unit() {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Unit;
    return e;
}
ExprPtr Expr::make_prod(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Prod;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}
ExprPtr Expr::make_sum(std::vector<std::pair<Rat, ExprPtr>> ts) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Sum;
    e->terms = std::move(ts);
    return e;
}
ExprPtr Expr::make_assoc(std::vector<ExprPtr> as) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Assoc;
    e->args = std::move(as);
    return e;
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

  private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }

    ExprPtr expr() {
        std::vector<std::pair<Rat, ExprPtr>> terms;
        Rat sign(1);
        if (eat('-'))
            sign = Rat(-1);
        else
            eat('+');
        for (;;) {
            auto [c, t] = term();
            terms.emplace_back(sign * c, t);
            if (eat('+'))
                sign = Rat(1);
            else if (eat('-'))
                sign = Rat(-1);
            else
                break;
        }
        if (terms.size() == 1 && terms[0].first == Rat(1)) return terms[0].second;
        return Expr::make_sum(std::move(terms));
    }

    // term := [rational '*'] factor ('*' factor)*
    std::pair<Rat, ExprPtr> term() {
        Rat coeff(1);
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t save = pos_;
            std::string num = digits();
            if (peek() == '/') {
                ++pos_;
                std::string den = digits();
                coeff = Rat::parse(num + "/" + den);
                if (!eat('*')) fail("expected '*' after rational coefficient");
            } else if (peek() == '*') {
                ++pos_;
                coeff = Rat::parse(num);
            } else if (num == "1") {
                pos_ = save;  // bare unit factor, not a coefficient
            } else {
                fail("expected '*' after integer coefficient");
            }
        }
        ExprPtr e = factor();
        while (peek() == '*') {
            ++pos_;
            e = Expr::make_prod(e, factor());
        }
        return {coeff, e};
    }

    ExprPtr factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            std::vector<ExprPtr> args;
            args.push_back(expr());
            while (eat(',')) args.push_back(expr());
            if (!eat(')')) fail("expected ')'");
            if (args.size() == 1) return args[0];
            if (args.size() % 2 == 0)
                fail("associator needs an odd number of arguments (got " +
                     std::to_string(args.size()) + ")");
            return Expr::make_assoc(std::move(args));
        }
        if (c == '1') {
            ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("unexpected digits after '1'");
            return Expr::make_unit();
        }
        if (c == 'y' || c == 'z' || c == 'x') {
            ++pos_;
            std::string d = digits();
            long idx = 0;
            try {
                idx = std::stol(d);
            } catch (const std::exception&) {
                fail("variable index out of range");
            }
            if (idx <= 0) fail("variable index must be >= 1");
            VarName v = c == 'y'   ? VarName::even(static_cast<int>(idx))
                        : c == 'z' ? VarName::odd(static_cast<int>(idx))
                                   : VarName::placeholder(static_cast<int>(idx));
            return Expr::make_var(v);
        }
        fail(c == '\0' ? std::string("unexpected end of input")
                       : std::string("unexpected character '") + c + "'");
    }

    std::string digits() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    size_t pos_ = 0;
};

// Anything that prints without a top-level binary operator.
bool atomic(const ExprPtr& e) {
    return e->kind == Expr::Kind::Var || e->kind == Expr::Kind::Unit ||
           e->kind == Expr::Kind::Assoc;
}

void fmt(const ExprPtr& e, std::string& out) {
    switch (e->kind) {
        case Expr::Kind::Var:
            out += e->var.str();
            break;
        case Expr::Kind::Unit:
            out += '1';
            break;
        case Expr::Kind::Prod: {
            // left-associated chains print without parentheses
            if (e->lhs->kind == Expr::Kind::Prod || atomic(e->lhs)) {
                fmt(e->lhs, out);
            } else {
                out += '(';
                fmt(e->lhs, out);
                out += ')';
            }
            out += '*';
            if (atomic(e->rhs)) {
                fmt(e->rhs, out);
            } else {
                out += '(';
                fmt(e->rhs, out);
                out += ')';
            }
            break;
        }
        case Expr::Kind::Assoc: {
            out += '(';
            for (size_t i = 0; i < e->args.size(); ++i) {
                if (i) out += ',';
                fmt(e->args[i], out);
            }
            out += ')';
            break;
        }
        case Expr::Kind::Sum: {
            bool first = true;
            for (auto& [c, t] : e->terms) {
                Rat a = c.sign() < 0 ? -c : c;
                if (first) {
                    if (c.sign() < 0) out += '-';
                } else {
                    out += c.sign() < 0 ? " - " : " + ";
                }
                if (!(a == Rat(1))) {
                    out += a.str();
                    out += '*';
                    if (atomic(t)) {
                        fmt(t, out);
                    } else {
                        out += '(';
                        fmt(t, out);
                        out += ')';
                    }
                } else if (t->kind == Expr::Kind::Sum) {
                    out += '(';
                    fmt(t, out);
                    out += ')';
                } else {
                    fmt(t, out);
                }
                first = false;
            }
            if (first) out += '0';
            break;
        }
    }
}

// Flattens sums, combines structurally identical terms, collapses trivial
// wrappers. Products are kept binary.
ExprPtr normalize(const ExprPtr& e);

void flatten(const ExprPtr& e, const Rat& c, std::vector<std::pair<Rat, ExprPtr>>& out) {
    if (e->kind == Expr::Kind::Sum) {
        for (auto& [ci, ti] : e->terms) flatten(normalize(ti), c * ci, out);
        return;
    }
    out.emplace_back(c, e);
}

bool same(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::Var:
            return a->var == b->var;
        case Expr::Kind::Unit:
            return true;
        case Expr::Kind::Prod:
            return same(a->lhs, b->lhs) && same(a->rhs, b->rhs);
        case Expr::Kind::Assoc:
            if (a->args.size() != b->args.size()) return false;
            for (size_t i = 0; i < a->args.size(); ++i)
                if (!same(a->args[i], b->args[i])) return false;
            return true;
        case Expr::Kind::Sum:
            if (a->terms.size() != b->terms.size()) return false;
            for (size_t i = 0; i < a->terms.size(); ++i)
                if (!(a->terms[i].first == b->terms[i].first) ||
                    !same(a->terms[i].second, b->terms[i].second))
                    return false;
            return true;
    }
    return false;
}

ExprPtr normalize(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Var:
        case Expr::Kind::Unit:
            return e;
        case Expr::Kind::Prod:
            return Expr::make_prod(normalize(e->lhs), normalize(e->rhs));
        case Expr::Kind::Assoc: {
            std::vector<ExprPtr> as;
            as.reserve(e->args.size());
            for (auto& a : e->args) as.push_back(normalize(a));
            return Expr::make_assoc(std::move(as));
        }
        case Expr::Kind::Sum: {
            std::vector<std::pair<Rat, ExprPtr>> flat, combined;
            flatten(e, Rat(1), flat);
            for (auto& [c, t] : flat) {
                bool merged = false;
                for (auto& [c2, t2] : combined)
                    if (same(t, t2)) {
                        c2 += c;
                        merged = true;
                        break;
                    }
                if (!merged) combined.emplace_back(c, t);
            }
            std::erase_if(combined, [](auto& p) { return p.first.is_zero(); });
            if (combined.size() == 1 && combined[0].first == Rat(1)) return combined[0].second;
            return Expr::make_sum(std::move(combined));
        }
    }
    return e;
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).run(); }

std::string format_expression(const ExprPtr& e) {
    std::string s;
    fmt(e, s);
    return s;
}

JordanPoly to_poly(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::Var:
            return JordanPoly::of_var(e->var);
        case Expr::Kind::Unit:
            return JordanPoly::unit();
        case Expr::Kind::Prod:
            return to_poly(e->lhs) * to_poly(e->rhs);
        case Expr::Kind::Sum: {
            JordanPoly p;
            for (auto& [c, t] : e->terms) p += c * to_poly(t);
            return p;
        }
        case Expr::Kind::Assoc: {
            std::vector<JordanPoly> args;
            args.reserve(e->args.size());
            for (auto& a : e->args) args.push_back(to_poly(a));
            return long_associator(args);
        }
    }
    throw Error("bad expression node");
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    return same(normalize(a), normalize(b));
}

}  // namespace jgpi
