#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jgpi/expr.hpp"

using namespace jgpi;

TEST_CASE("associator shorthand") {
    auto e = parse_expression("(y1,y2,z1)");
    REQUIRE(e->kind == Expr::Kind::Assoc);
    CHECK(e->args.size() == 3);
    CHECK(e->args[0]->var == VarName::even(1));
    CHECK(e->args[2]->var == VarName::odd(1));
    CHECK(format_expression(e) == "(y1,y2,z1)");
}

TEST_CASE("identity (5) parses as a difference of long associators") {
    auto e = parse_expression("(y1,y2,z1,x1,y3) - (y1,y3,z1,x1,y2)");
    REQUIRE(e->kind == Expr::Kind::Sum);
    REQUIRE(e->terms.size() == 2);
    CHECK(e->terms[0].first == Rat(1));
    CHECK(e->terms[1].first == Rat(-1));
    CHECK(e->terms[0].second->kind == Expr::Kind::Assoc);
    CHECK(e->terms[0].second->args.size() == 5);
    CHECK(e->terms[1].second->args[1]->var == VarName::even(3));
}

TEST_CASE("explicit parentheses give right-nested products") {
    auto e = parse_expression("z1*(z2*z3)");
    REQUIRE(e->kind == Expr::Kind::Prod);
    CHECK(e->lhs->kind == Expr::Kind::Var);
    REQUIRE(e->rhs->kind == Expr::Kind::Prod);
    CHECK(e->rhs->lhs->var == VarName::odd(2));
    CHECK(format_expression(e) == "z1*(z2*z3)");
}

TEST_CASE("product chains are left associated") {
    auto e = parse_expression("z1*z2*z3");
    REQUIRE(e->kind == Expr::Kind::Prod);
    CHECK(e->lhs->kind == Expr::Kind::Prod);
    CHECK(format_expression(e) == "z1*z2*z3");
}

TEST_CASE("rational coefficients") {
    auto e = parse_expression("1/2*(z1*z2)");
    REQUIRE(e->kind == Expr::Kind::Sum);
    REQUIRE(e->terms.size() == 1);
    CHECK(e->terms[0].first == Rat(1, 2));
    CHECK(format_expression(e) == "1/2*(z1*z2)");
}

TEST_CASE("unit literal") {
    auto e = parse_expression("1");
    CHECK(e->kind == Expr::Kind::Unit);
    auto s = parse_expression("y1*y1 + 2*y1 + 1");
    CHECK(to_poly(s).num_terms() == 3);
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("(y1,y2)"), ParseError);        // even argument count
    CHECK_THROWS_AS(parse_expression("(y1,y2,z1,z2)"), ParseError);  // even argument count
    CHECK_THROWS_AS(parse_expression("y0"), ParseError);             // index 0
    CHECK_THROWS_AS(parse_expression("y1 +"), ParseError);
    CHECK_THROWS_AS(parse_expression("q1"), ParseError);
    CHECK_THROWS_AS(parse_expression("3"), ParseError);  // bare integer is not a factor
    try {
        parse_expression("z1**z2");
    } catch (const ParseError& pe) {
        CHECK(pe.pos == 3);
    }
}

TEST_CASE("round trip: parse(format(a)) == a") {
    const char* samples[] = {
        "(y1,y2,z1)",
        "(z1,y1,y2,z2,y3)",
        "1/2*(z1*z2)",
        "z1*(z2*z3)",
        "z1*z2*z3 - 2*(y1*(z1*z2)) + 7/3*(y1,y2,z1)",
        "(y1*y2,z1,z2) - y1*(y2,z1,z2) - y2*(y1,z1,z2) + 2*(z1*(z2,y1,y2))",
        "x1*(x2*x3) - x2*(x1*x3)",
        "1",
        "y1*y1 + 2*y1 + 1",
        "(y1+z1,x1,x2)",
    };
    for (const char* s : samples) {
        auto a = parse_expression(s);
        auto b = parse_expression(format_expression(a));
        CAPTURE(s);
        CAPTURE(format_expression(a));
        CHECK(structurally_equal(a, b));
    }
}

TEST_CASE("whitespace insensitivity") {
    auto a = parse_expression(" ( y1 , y2 , z1 ) -  ( y2 , y1 , z1 ) ");
    auto b = parse_expression("(y1,y2,z1)-(y2,y1,z1)");
    CHECK(structurally_equal(a, b));
}

TEST_CASE("associator expansion is the left-normed chain") {
    // (e1,e2,e3) = (e1 e2)e3 - e1(e2 e3)
    JordanPoly p = to_poly(parse_expression("(z1,y1,z2)"));
    JordanPoly q = to_poly(parse_expression("(z1*y1)*z2 - z1*(y1*z2)"));
    CHECK(p == q);
    // length 5 expands through the length-3 head
    JordanPoly a = to_poly(parse_expression("(z1,y1,y2,z2,y3)"));
    JordanPoly b = associator(to_poly(parse_expression("(z1,y1,y2)")),
                              to_poly(parse_expression("z2")), to_poly(parse_expression("y3")));
    CHECK(a == b);
}
