#include <doctest.h>

#include <random>

#include "slicekit/laurent.hpp"
#include "slicekit/parse.hpp"

using namespace slicekit;

TEST_CASE("parser accepts the documented grammar") {
    VarContext ctx({"x", "y"});
    CHECK(format_polynomial(parse_polynomial("x^2 - 2*x + 1", ctx)) == "x^2 - 2*x + 1");
    CHECK(format_polynomial(parse_polynomial("-x^2", ctx)) == "-x^2");
    CHECK(format_polynomial(parse_polynomial("1/2*x + 1/2*x", ctx)) == "x");
    CHECK(format_polynomial(parse_polynomial("(x + y)^2", ctx)) == "x^2 + 2*x*y + y^2");
    CHECK(format_polynomial(parse_polynomial("3", ctx)) == "3");
    CHECK(format_polynomial(parse_polynomial("0", ctx)) == "0");
    CHECK(format_polynomial(parse_polynomial("- (x - y)", ctx)) == "-x + y");
    CHECK(format_polynomial(parse_polynomial("2/3", ctx)) == "2/3");
    CHECK(parse_polynomial(" x \n + y ", ctx) == parse_polynomial("y + x", ctx));
}

TEST_CASE("parser reports errors with position and kind") {
    VarContext ctx({"x", "y"});

    CHECK_THROWS_AS(parse_polynomial("2x", ctx), ParseError);  // implicit product
    CHECK_THROWS_AS(parse_polynomial("x +", ctx), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x", ctx), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", ctx), ParseError);

    try {
        parse_polynomial("x * w", ctx);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::UnknownVariable);
        CHECK(e.line == 1);
        CHECK(e.column == 5);
    }

    try {
        parse_polynomial("x^-2", ctx);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::NegativeExponent);
    }

    try {
        parse_polynomial("x^100000", ctx);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::ExponentTooLarge);
    }

    try {
        parse_polynomial("x +\n* y", ctx);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("formatting round-trips") {
    VarContext ctx({"x", "y", "z"});
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> exp(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = Polynomial::zero(ctx);
        for (int t = 0; t < 5; ++t) {
            std::vector<std::uint32_t> e = {exp(rng), exp(rng), exp(rng)};
            p = p + Polynomial::from_monomial(ctx, Monomial(e), make_rational(coeff(rng), 3));
        }
        CHECK(parse_polynomial(format_polynomial(p), ctx) == p);
    }
}

TEST_CASE("fuzzed input never crashes the parser") {
    VarContext ctx({"x", "y"});
    std::mt19937_64 rng(7);
    const std::string alphabet = "xy01+-*/^() \t\n";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<std::size_t> len(0, 24);
    for (int trial = 0; trial < 400; ++trial) {
        std::string text;
        const std::size_t n = len(rng);
        for (std::size_t k = 0; k < n; ++k) text += alphabet[pick(rng)];
        try {
            (void)parse_polynomial(text, ctx);
        } catch (const ParseError&) {
            // rejected input is fine; crashing is not
        }
    }
}

TEST_CASE("laurent formatting") {
    VarContext ctx({"x"});
    const Polynomial x = Polynomial::variable(ctx, 0);
    LaurentPoly a = LaurentPoly::term(x, 2) + LaurentPoly::term(Polynomial::one(ctx), -1) +
                    LaurentPoly::from_poly(x * x);
    CHECK(format_laurent(a) == "(x)*t^2 + (x^2) + (1)*t^-1");
    CHECK(format_laurent(LaurentPoly::zero(ctx), "u") == "0");
    CHECK(format_laurent(LaurentPoly::term(x, 1), "u") == "(x)*u");
}
