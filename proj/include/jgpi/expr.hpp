#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jgpi/poly.hpp"

namespace jgpi {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// AST of the human-facing expression syntax:
///   expr     := term (('+'|'-') term)*
///   term     := [rational '*'] factor ('*' factor)*
///   factor   := var | '1' | '(' expr (',' expr)+ ')' | '(' expr ')'
///   var      := ('y'|'z'|'x') digits
///   rational := int ['/' int]
/// Products are binary (left associated when written as chains); an
/// associator list of odd length 2k+1 denotes the left-normed associator.
struct Expr {
    enum class Kind { Var, Unit, Prod, Sum, Assoc };

    Kind kind;
    VarName var{};                                // Var
    ExprPtr lhs, rhs;                             // Prod
    std::vector<std::pair<Rat, ExprPtr>> terms;   // Sum
    std::vector<ExprPtr> args;                    // Assoc, odd length >= 3

    static ExprPtr make_var(VarName v);
    static ExprPtr make_unit();
    static ExprPtr make_prod(ExprPtr a, ExprPtr b);
    static ExprPtr make_sum(std::vector<std::pair<Rat, ExprPtr>> ts);
    static ExprPtr make_assoc(std::vector<ExprPtr> as);
};

struct ParseError : Error {
    size_t pos;
    ParseError(size_t p, const std::string& msg)
        : Error("parse error at position " + std::to_string(p) + ": " + msg), pos(p) {}
};

/// Whitespace-insensitive recursive-descent parser for the grammar above.
ExprPtr parse_expression(std::string_view text);

/// Prints a canonical surface form; parse(format(a)) is structurally equal
/// to a (after coefficient normalization).
std::string format_expression(const ExprPtr& e);

/// Expands the AST into the free commutative nonassociative algebra.
/// Placeholder variables pass through as leaves.
JordanPoly to_poly(const ExprPtr& e);

/// Structural equality modulo coefficient normalization (sums flattened,
/// coefficients combined).
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace jgpi
