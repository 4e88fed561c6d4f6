#include <doctest.h>

#include "slicekit/linearize.hpp"
#include "slicekit/parse.hpp"

using namespace slicekit;

namespace {

std::vector<Polynomial> read_all(const VarContext& ctx, const std::vector<std::string>& text) {
    std::vector<Polynomial> out;
    for (const auto& s : text) out.push_back(parse_polynomial(s, ctx));
    return out;
}

// D = 2 d/dx + 3 d/dy with slice x/2; phi straightens it onto d/dy.
struct Affine {
    VarContext ctx{{"x", "y"}};
    Derivation d{ctx, read_all(ctx, {"2", "3"})};
    Polynomial s{parse_polynomial("1/2*x", ctx)};
    AutomorphismPair phi{verify_automorphism(
        Endomorphism(ctx, read_all(ctx, {"2*y", "3*y - 1/2*x"})),
        Endomorphism(ctx, read_all(ctx, {"3*x - 2*y", "1/2*x"})))};
};

// D = d/dy with the offset slice y + x^2 and the identity conjugator.
struct Offset {
    VarContext ctx{{"x", "y"}};
    Derivation d{ctx, read_all(ctx, {"0", "1"})};
    Polynomial s{parse_polynomial("y + x^2", ctx)};
    AutomorphismPair phi{verify_automorphism(Endomorphism::identity(ctx),
                                             Endomorphism::identity(ctx))};
};

}  // namespace

TEST_CASE("strict condition: slice becomes the last coordinate") {
    Affine fx;
    const auto check = check_slice_coordinate(fx.d, fx.s, fx.phi);
    CHECK(check.ok);
    CHECK(check.conjugate_ok);
    CHECK(check.slice_ok);

    Offset off;
    const auto offcheck = check_slice_coordinate(off.d, off.s, off.phi);
    CHECK_FALSE(offcheck.ok);
    CHECK(offcheck.conjugate_ok);
    CHECK_FALSE(offcheck.slice_ok);
    CHECK(offcheck.slice_residual == parse_polynomial("x^2", off.ctx));
}

TEST_CASE("affine condition tolerates a kernel offset") {
    Offset off;
    const auto check = check_slice_affine(off.d, off.s, off.phi);
    CHECK(check.ok);
    CHECK(check.offset == parse_polynomial("x^2", off.ctx));

    // An offset involving the last coordinate is rejected.
    const Polynomial bad = parse_polynomial("y + x*y", off.ctx);
    const auto badcheck = check_slice_affine(off.d, bad, off.phi);
    CHECK_FALSE(badcheck.ok);
}

TEST_CASE("certificate along the strict route") {
    Affine fx;
    const LinearizationCertificate cert = build_linearization(fx.d, fx.s, -1, fx.phi);
    CHECK(cert.route == LinearizationRoute::SliceCoordinate);
    CHECK(cert.offset.is_zero());
    CHECK(cert.psi.forward().apply(fx.s) == Polynomial::variable(fx.ctx, 1));
    CHECK(cert.diagonal.image(0).is_zero());
    CHECK(cert.diagonal.image(1) == parse_polynomial("-y", fx.ctx));
    // The certificate is self-verifying: conjugation really gives the diagonal.
    const Derivation semisimple = fx.d.scaled(fx.s * Rational(-1));
    CHECK(conjugate(cert.psi, semisimple) == cert.diagonal);
}

TEST_CASE("certificate along the affine route") {
    Offset off;
    const LinearizationCertificate cert = build_linearization(off.d, off.s, 3, off.phi);
    CHECK(cert.route == LinearizationRoute::SliceAffine);
    CHECK(cert.offset == parse_polynomial("x^2", off.ctx));
    CHECK(cert.psi.forward().image(1) == parse_polynomial("y - x^2", off.ctx));
    CHECK(cert.psi.forward().apply(off.s) == Polynomial::variable(off.ctx, 1));
    CHECK(cert.diagonal.image(1) == parse_polynomial("3*y", off.ctx));

    // Without the affine condition there is no certificate along this route.
    VarContext ctx({"x", "y"});
    const Derivation d(ctx, read_all(ctx, {"0", "1"}));
    const AutomorphismPair id =
        verify_automorphism(Endomorphism::identity(ctx), Endomorphism::identity(ctx));
    CHECK_THROWS_AS(build_linearization(d, parse_polynomial("y + x*y", ctx), 1, id),
                    ConditionError);
}

TEST_CASE("diagonal factorization normal form") {
    VarContext ctx({"x", "y"});
    const std::vector<Rational> spectrum = {Rational(0), Rational(2)};

    SUBCASE("a valid factorization is normalized") {
        const Polynomial sigma = parse_polynomial("3*y", ctx);
        const Derivation delta(ctx, read_all(ctx, {"0", "1/3"}));
        const auto outcome = normalize_diagonal_factorization(spectrum, sigma, delta, 2);
        REQUIRE(outcome.ok());
        CHECK(outcome.form->pivot == 1);
        CHECK(outcome.form->scaling == 3);
        CHECK(outcome.form->normalizer.forward().apply(sigma) ==
              Polynomial::variable(ctx, 1));
    }

    SUBCASE("pivot in the interior gets permuted to the end") {
        const std::vector<Rational> front = {Rational(2), Rational(0)};
        const Polynomial sigma = parse_polynomial("x", ctx);
        const Derivation delta(ctx, read_all(ctx, {"1", "0"}));
        const auto outcome = normalize_diagonal_factorization(front, sigma, delta, 2);
        REQUIRE(outcome.ok());
        CHECK(outcome.form->pivot == 0);
        CHECK(outcome.form->normalizer.forward().image(0) == Polynomial::variable(ctx, 1));
    }

    SUBCASE("two nonzero eigenvalues are refused") {
        const std::vector<Rational> two = {Rational(1), Rational(1)};
        const auto outcome = normalize_diagonal_factorization(
            two, parse_polynomial("y", ctx), Derivation(ctx, read_all(ctx, {"0", "1"})), 1);
        REQUIRE_FALSE(outcome.ok());
        CHECK(outcome.error->kind == FactorizationError::Kind::TwoNonzeroEigenvalues);
    }

    SUBCASE("hypotheses are checked, not assumed") {
        // delta(sigma) = 2, not 1.
        const Polynomial sigma = parse_polynomial("2*y", ctx);
        const Derivation delta(ctx, read_all(ctx, {"0", "1"}));
        const auto outcome = normalize_diagonal_factorization(spectrum, sigma, delta, 2);
        REQUIRE_FALSE(outcome.ok());
        CHECK(outcome.error->kind == FactorizationError::Kind::HypothesesFail);

        const std::vector<Rational> none = {Rational(0), Rational(0)};
        const auto zero_outcome = normalize_diagonal_factorization(
            none, parse_polynomial("y", ctx), Derivation::zero(ctx), 1);
        REQUIRE_FALSE(zero_outcome.ok());
        CHECK(zero_outcome.error->kind == FactorizationError::Kind::HypothesesFail);
    }
}

TEST_CASE("slice shifting by a kernel element") {
    VarContext ctx({"x", "y", "z"});
    const Derivation d(ctx, read_all(ctx, {"0", "x", "1"}));
    const Polynomial s = parse_polynomial("z", ctx);
    const Polynomial a = parse_polynomial("x^2", ctx);
    const SliceShift shift = shift_slice(d, s, a, 2);
    CHECK(shift.shifted_slice == parse_polynomial("z - x^2", ctx));
    CHECK(shift.flow.forward().image(2) == parse_polynomial("z - x^2", ctx));
    CHECK(shift.flow.forward().image(1) == parse_polynomial("y - x^3", ctx));
    CHECK(shift.conjugated.image(2) == parse_polynomial("2*z - 2*x^2", ctx));
    CHECK_FALSE(shift.note.empty());

    CHECK_THROWS_AS(shift_slice(d, s, parse_polynomial("y", ctx), 2), KernelMembershipError);
}

TEST_CASE("kernel criterion clauses") {
    Affine fx;
    const std::vector<Polynomial> gens = {parse_polynomial("3*x - 2*y", fx.ctx)};
    const auto report = check_kernel_criterion(fx.d, fx.s, fx.phi, gens);
    CHECK(report.all_ok);
    CHECK(report.generators_descend.ok);
    CHECK(report.slice_affine.ok);
    CHECK(report.conjugate_coordinate.ok);
    CHECK(report.note.find("sufficient") != std::string::npos);

    // A generator whose image still involves the last coordinate must fail
    // the first clause.  phi(x) = 2y involves y.
    const auto bad = check_kernel_criterion(fx.d, fx.s, fx.phi,
                                            std::vector<Polynomial>{
                                                parse_polynomial("x", fx.ctx)});
    CHECK_FALSE(bad.all_ok);
    CHECK_FALSE(bad.generators_descend.ok);
}

TEST_CASE("rank-one normal form") {
    VarContext ctx({"x", "y", "z"});
    SUBCASE("f = x, g = 1") {
        const WangData data =
            wang_normal_form(parse_polynomial("x", ctx), parse_polynomial("1", ctx));
        CHECK(data.derivation.image(1) == parse_polynomial("x", ctx));
        CHECK(data.derivation.image(2) == parse_polynomial("1", ctx));
        CHECK(data.u * data.f + data.v * data.g == Polynomial::one(ctx));
        CHECK(check_slice(data.derivation, data.slice).ok);
        for (const auto& gen : data.kernel_generators)
            CHECK(data.derivation.apply(gen).is_zero());
        CHECK(data.kernel_generators[0] == parse_polynomial("x", ctx));
        CHECK(data.kernel_generators[1] == parse_polynomial("y - x*z", ctx));
    }
    SUBCASE("f = x, g = 1 + x needs genuine cofactors") {
        const WangData data =
            wang_normal_form(parse_polynomial("x", ctx), parse_polynomial("1 + x", ctx));
        CHECK(data.u * data.f + data.v * data.g == Polynomial::one(ctx));
        CHECK(check_slice(data.derivation, data.slice).ok);
        CHECK(data.derivation.apply(data.kernel_generators[1]).is_zero());
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(wang_normal_form(parse_polynomial("y", ctx), parse_polynomial("1", ctx)),
                        NotUnivariateError);
        CHECK_THROWS_AS(wang_normal_form(parse_polynomial("x", ctx), parse_polynomial("x", ctx)),
                        GcdError);
    }
}
