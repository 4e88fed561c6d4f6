#include <doctest.h>

#include <algorithm>

#include "slicekit/kernel.hpp"
#include "slicekit/parse.hpp"

using namespace slicekit;

namespace {

std::vector<Polynomial> read_all(const VarContext& ctx, const std::vector<std::string>& text) {
    std::vector<Polynomial> out;
    for (const auto& s : text) out.push_back(parse_polynomial(s, ctx));
    return out;
}

bool contains(const std::vector<Polynomial>& set, const Polynomial& p) {
    return std::find(set.begin(), set.end(), p) != set.end();
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

TEST_CASE("kernel basis of the running example") {
    VarContext ctx({"x", "y", "z"});
    const Derivation d(ctx, read_all(ctx, {"0", "x", "1"}));
    const KernelBasis basis = kernel_basis(d, 2);
    REQUIRE(basis.elements.size() == 4);
    CHECK(basis.elements[0] == Polynomial::one(ctx));
    CHECK(contains(basis.elements, parse_polynomial("x", ctx)));
    CHECK(contains(basis.elements, parse_polynomial("x^2", ctx)));
    CHECK(contains(basis.elements, parse_polynomial("x*z - y", ctx)));
    for (const auto& e : basis.elements) CHECK(d.apply(e).is_zero());
    CHECK(basis.degree == 2);
    CHECK(basis.matrix_cols == 10);  // monomials of degree <= 2 in three variables
}

TEST_CASE("kernel dimension matches the free-subring count") {
    // ker(d/dz) on Q[x,y,z] is Q[x,y]; its degree <= d slice has dimension
    // C(2 + d, d).
    VarContext ctx({"x", "y", "z"});
    const Derivation d(ctx, read_all(ctx, {"0", "0", "1"}));
    for (unsigned deg = 1; deg <= 4; ++deg) {
        const KernelBasis basis = kernel_basis(d, deg);
        CHECK(basis.elements.size() == binomial(2 + deg, deg));
    }
}

TEST_CASE("kernel search is monotone in the degree bound") {
    VarContext ctx({"x", "y", "z"});
    const Derivation d(ctx, read_all(ctx, {"0", "x", "1"}));
    std::size_t previous = 0;
    for (unsigned deg = 1; deg <= 5; ++deg) {
        const std::size_t count = kernel_basis(d, deg).elements.size();
        CHECK(count >= previous);
        previous = count;
    }
}

TEST_CASE("common kernel of a family") {
    VarContext ctx({"x", "y", "z"});
    const std::vector<Derivation> family = {
        Derivation(ctx, read_all(ctx, {"1", "0", "0"})),
        Derivation(ctx, read_all(ctx, {"0", "1", "0"})),
    };
    const KernelBasis common = kernel_intersection(family, 3);
    REQUIRE(common.elements.size() == 4);  // 1, z, z^2, z^3
    for (const auto& e : common.elements)
        for (const auto& d : family) CHECK(d.apply(e).is_zero());
    CHECK(contains(common.elements, parse_polynomial("z", ctx)));

    CHECK_THROWS_AS(kernel_intersection(std::vector<Derivation>{}, 3), EmptyFamilyError);
}

TEST_CASE("obstruction report carries a witness or an honest caveat") {
    VarContext ctx({"x", "y", "z"});
    const std::vector<Derivation> partials = {
        Derivation(ctx, read_all(ctx, {"1", "0", "0"})),
        Derivation(ctx, read_all(ctx, {"0", "1", "0"})),
    };
    const MlObstruction found = ml_obstruction_report(partials, 2);
    REQUIRE(found.witness.has_value());
    CHECK(*found.witness == parse_polynomial("z", ctx));
    CHECK(found.caveat == ml_degree_caveat(2));

    const std::vector<Derivation> all = {
        Derivation(ctx, read_all(ctx, {"1", "0", "0"})),
        Derivation(ctx, read_all(ctx, {"0", "1", "0"})),
        Derivation(ctx, read_all(ctx, {"0", "0", "1"})),
    };
    const MlObstruction none = ml_obstruction_report(all, 3);
    CHECK_FALSE(none.witness.has_value());
    CHECK(none.intersection.elements.size() == 1);  // constants only
    CHECK(none.caveat.find("does not rule") != std::string::npos);
}
