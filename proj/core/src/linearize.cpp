#include "slicekit/linearize.hpp"

#include <algorithm>

#include "slicekit/parse.hpp"

namespace slicekit {

namespace {

// phi . D . phi^{-1} compared with d/dx_n; shared by both condition checks.
struct ConjugateResult {
    bool ok;
    std::optional<std::size_t> witness;
    Polynomial residual;
};

ConjugateResult conjugate_to_coordinate(const Derivation& d, const AutomorphismPair& phi) {
    const VarContext& ctx = d.context();
    const Derivation conjugated = conjugate(phi, d);
    const Derivation target = Derivation::coordinate(ctx, ctx.size() - 1);
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const Polynomial residual = conjugated.image(i) - target.image(i);
        if (!residual.is_zero()) return {false, i, residual};
    }
    return {true, std::nullopt, Polynomial::zero(ctx)};
}

}  // namespace

CoordinateCheck check_slice_coordinate(const Derivation& d, const Polynomial& s,
                                       const AutomorphismPair& phi) {
    require_same_context(d.context(), s.context());
    require_same_context(d.context(), phi.context());
    const VarContext& ctx = d.context();
    const auto conj = conjugate_to_coordinate(d, phi);
    const Polynomial slice_residual =
        phi.forward().apply(s) - Polynomial::variable(ctx, ctx.size() - 1);
    return {conj.ok && slice_residual.is_zero(),
            conj.ok,
            conj.witness,
            conj.residual,
            slice_residual.is_zero(),
            slice_residual};
}

AffineCheck check_slice_affine(const Derivation& d, const Polynomial& s,
                               const AutomorphismPair& phi) {
    require_same_context(d.context(), s.context());
    require_same_context(d.context(), phi.context());
    const VarContext& ctx = d.context();
    const std::size_t last = ctx.size() - 1;
    const auto conj = conjugate_to_coordinate(d, phi);
    const Polynomial offset = phi.forward().apply(s) - Polynomial::variable(ctx, last);
    const bool offset_ok = !offset.depends_on(last);
    return {conj.ok && offset_ok, conj.ok, conj.witness, conj.residual, offset_ok, offset};
}

LinearizationCertificate build_linearization(const Derivation& d, const Polynomial& s,
                                             std::int64_t N, const AutomorphismPair& phi) {
    const VarContext& ctx = d.context();
    const std::size_t last = ctx.size() - 1;

    const AffineCheck condition = check_slice_affine(d, s, phi);
    if (!condition.conjugate_ok)
        throw ConditionError("phi does not conjugate the derivation to d/d" + ctx.name(last) +
                             ": generator '" + ctx.name(condition.conjugate_witness.value()) +
                             "' maps to an extra " + format_polynomial(condition.conjugate_residual));
    if (!condition.offset_ok)
        throw ConditionError("phi(s) - " + ctx.name(last) + " = " +
                             format_polynomial(condition.offset) + " still involves " +
                             ctx.name(last));

    // tau subtracts the offset from the last coordinate; psi = tau . phi.
    std::vector<Polynomial> tau_images;
    tau_images.reserve(ctx.size());
    for (std::size_t i = 0; i < last; ++i) tau_images.push_back(Polynomial::variable(ctx, i));
    tau_images.push_back(Polynomial::variable(ctx, last) - condition.offset);
    const AutomorphismPair tau = invert_triangular(Endomorphism(ctx, std::move(tau_images)));
    const AutomorphismPair psi = compose(tau, phi);

    // Re-verify the two certificate identities.
    if (psi.forward().apply(s) != Polynomial::variable(ctx, last))
        throw InternalError("linearizer failed to carry the slice to the last coordinate");

    std::vector<Rational> eigenvalues(ctx.size(), Rational(0));
    eigenvalues.back() = Rational(static_cast<long>(N));
    const Derivation diagonal = Derivation::diagonal(ctx, eigenvalues);
    const Derivation conjugated = conjugate(psi, semisimple_generator(d, s, N));
    if (conjugated != diagonal)
        throw InternalError("linearizer failed to diagonalize the semisimple generator");

    const auto route = condition.offset.is_zero() ? LinearizationRoute::SliceCoordinate
                                                  : LinearizationRoute::SliceAffine;
    return {psi, diagonal, condition.offset, route};
}

FactorizationOutcome normalize_diagonal_factorization(std::span<const Rational> eigenvalues,
                                                      const Polynomial& sigma,
                                                      const Derivation& delta, std::int64_t N) {
    const VarContext& ctx = delta.context();
    require_same_context(ctx, sigma.context());
    if (eigenvalues.size() != ctx.size())
        throw ContextMismatchError("need one eigenvalue per ring variable");

    auto fail = [](FactorizationError::Kind kind, std::string detail) {
        return FactorizationOutcome{std::nullopt, FactorizationError{kind, std::move(detail)}};
    };

    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        if (eigenvalues[i] != 0) nonzero.push_back(i);
    if (nonzero.size() >= 2)
        return fail(FactorizationError::Kind::TwoNonzeroEigenvalues,
                    "eigenvalues of '" + ctx.name(nonzero[0]) + "' and '" + ctx.name(nonzero[1]) +
                        "' are both nonzero");

    const Derivation e = Derivation::diagonal(ctx, eigenvalues);
    const Rational weight(static_cast<long>(N));
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const Polynomial expected = sigma * delta.image(i) * weight;
        if (e.image(i) != expected)
            return fail(FactorizationError::Kind::HypothesesFail,
                        "E(" + ctx.name(i) + ") = " + format_polynomial(e.image(i)) +
                            " but N*sigma*delta(" + ctx.name(i) + ") = " +
                            format_polynomial(expected));
    }
    const Polynomial delta_sigma = delta.apply(sigma);
    if (delta_sigma != Polynomial::one(ctx))
        return fail(FactorizationError::Kind::HypothesesFail,
                    "delta(sigma) = " + format_polynomial(delta_sigma) + ", expected 1");
    if (nonzero.empty())
        return fail(FactorizationError::Kind::HypothesesFail,
                    "all eigenvalues vanish, so E cannot factor through a slice");

    const std::size_t pivot = nonzero.front();
    if (eigenvalues[pivot] != weight)
        return fail(FactorizationError::Kind::EigenvalueMismatch,
                    "nonzero eigenvalue on '" + ctx.name(pivot) + "' is " +
                        to_string(eigenvalues[pivot]) + ", expected " + to_string(weight));

    // The hypotheses force sigma = c * x_pivot and delta(x_pivot) = 1/c;
    // failure past this point is a library bug.
    const Monomial xp = Monomial::variable(ctx.size(), pivot);
    const Rational c = sigma.coefficient(xp);
    if (c == 0 || sigma != Polynomial::from_monomial(ctx, xp, c))
        throw InternalError("sigma is not a rational multiple of the pivot variable");
    if (delta.image(pivot) != Polynomial::constant(ctx, 1 / c))
        throw InternalError("delta does not invert the sigma scaling on the pivot");

    std::vector<std::size_t> permutation;
    permutation.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i)
        if (i != pivot) permutation.push_back(i);
    permutation.push_back(pivot);

    // Coordinate change: old variable permutation[j] becomes coordinate j,
    // with the pivot rescaled so that sigma maps to exactly the last one.
    std::vector<Polynomial> forward(ctx.size(), Polynomial::zero(ctx));
    std::vector<Polynomial> backward(ctx.size(), Polynomial::zero(ctx));
    for (std::size_t j = 0; j + 1 < ctx.size(); ++j) {
        forward[permutation[j]] = Polynomial::variable(ctx, j);
        backward[j] = Polynomial::variable(ctx, permutation[j]);
    }
    forward[pivot] = Polynomial::variable(ctx, ctx.size() - 1) * (1 / c);
    backward[ctx.size() - 1] = Polynomial::variable(ctx, pivot) * c;
    const AutomorphismPair normalizer = verify_automorphism(
        Endomorphism(ctx, std::move(forward)), Endomorphism(ctx, std::move(backward)));

    return {DiagonalNormalForm{pivot, c, std::move(permutation), normalizer}, std::nullopt};
}

SliceShift shift_slice(const Derivation& d, const Polynomial& s, const Polynomial& a,
                       std::int64_t N, unsigned bound) {
    require_same_context(d.context(), s.context());
    require_same_context(d.context(), a.context());
    const Polynomial da = d.apply(a);
    if (!da.is_zero())
        throw KernelMembershipError(0, "shift amount is not in ker D: D(" + format_polynomial(a) +
                                           ") = " + format_polynomial(da));

    const AutomorphismPair flow = exp_automorphism(d, -a, bound);
    const Polynomial shifted = flow.forward().apply(s);
    if (shifted != s - a)
        throw InternalError("flow conjugation moved the slice to " + format_polynomial(shifted) +
                            " instead of s - a");

    const Derivation conjugated = conjugate(flow, semisimple_generator(d, s, N));
    if (conjugated != semisimple_generator(d, shifted, N))
        throw InternalError("flow conjugation did not yield the shifted semisimple generator");

    return {flow, shifted, conjugated,
            "sign convention: exponentiating -a*D moves the slice to s - a; the opposite "
            "exponent sign moves it to s + a"};
}

KernelCriterionReport check_kernel_criterion(const Derivation& d, const Polynomial& s,
                                             const AutomorphismPair& phi,
                                             std::span<const Polynomial> kernel_generators) {
    const VarContext& ctx = d.context();
    const std::size_t last = ctx.size() - 1;

    KernelCriterionClause generators{true, ""};
    for (std::size_t k = 0; k < kernel_generators.size(); ++k) {
        const Polynomial image = phi.forward().apply(kernel_generators[k]);
        if (image.depends_on(last)) {
            generators = {false, "phi(" + format_polynomial(kernel_generators[k]) + ") = " +
                                     format_polynomial(image) + " involves " + ctx.name(last)};
            break;
        }
    }

    const AffineCheck affine = check_slice_affine(d, s, phi);
    KernelCriterionClause slice{affine.offset_ok, ""};
    if (!affine.offset_ok)
        slice.witness = "phi(s) - " + ctx.name(last) + " = " + format_polynomial(affine.offset) +
                        " involves " + ctx.name(last);

    KernelCriterionClause conjugate_clause{affine.conjugate_ok, ""};
    if (!affine.conjugate_ok)
        conjugate_clause.witness =
            "conjugated derivation differs from d/d" + ctx.name(last) + " on generator '" +
            ctx.name(affine.conjugate_witness.value()) + "' by " +
            format_polynomial(affine.conjugate_residual);

    const bool all = generators.ok && slice.ok && conjugate_clause.ok;
    return {generators, slice, conjugate_clause, all,
            "criterion is sufficient for linearizability, not necessary"};
}

namespace {

// Dense univariate coefficient vector (in the first variable) of a
// polynomial that must not involve the other two.
std::vector<Rational> univariate_coeffs(const Polynomial& p) {
    for (std::size_t i = 1; i < p.context().size(); ++i)
        if (p.depends_on(i))
            throw NotUnivariateError("expected a polynomial in '" + p.context().name(0) +
                                     "' only, got " + format_polynomial(p));
    std::vector<Rational> coeffs(p.degree_in(0) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) coeffs[m.exponent(0)] = c;
    return coeffs;
}

void strip_zeros(std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Quotient and remainder of dense univariate division.
std::pair<std::vector<Rational>, std::vector<Rational>> divmod(std::vector<Rational> num,
                                                               const std::vector<Rational>& den) {
    strip_zeros(num);
    std::vector<Rational> quot(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0,
                               Rational(0));
    while (num.size() >= den.size()) {
        const Rational factor = num.back() / den.back();
        const std::size_t shift = num.size() - den.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
        strip_zeros(num);
        if (num.empty()) break;
    }
    return {std::move(quot), std::move(num)};
}

std::vector<Rational> mul_dense(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Rational> sub_dense(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    strip_zeros(a);
    return a;
}

Polynomial dense_to_poly(const VarContext& ctx, const std::vector<Rational>& coeffs) {
    Polynomial out = Polynomial::zero(ctx);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        out += Polynomial::from_monomial(ctx, Monomial::variable(ctx.size(), 0, k), coeffs[k]);
    return out;
}

}  // namespace

WangData wang_normal_form(const Polynomial& f, const Polynomial& g) {
    const VarContext& ctx = f.context();
    require_same_context(ctx, g.context());
    if (ctx.size() != 3)
        throw ContextMismatchError("the rank-one normal form lives on a three-variable ring");

    // Extended Euclid on dense coefficient vectors: u*f + v*g = gcd.
    std::vector<Rational> r0 = univariate_coeffs(f), r1 = univariate_coeffs(g);
    std::vector<Rational> u0{Rational(1)}, u1{};
    std::vector<Rational> v0{}, v1{Rational(1)};
    strip_zeros(r0);
    strip_zeros(r1);
    if (r0.empty() && r1.empty()) throw GcdError("gcd(0, 0) is not 1");
    while (!r1.empty()) {
        auto [q, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        auto unew = sub_dense(u0, mul_dense(q, u1));
        u0 = std::move(u1);
        u1 = std::move(unew);
        auto vnew = sub_dense(v0, mul_dense(q, v1));
        v0 = std::move(v1);
        v1 = std::move(vnew);
    }
    if (r0.size() != 1)
        throw GcdError("gcd(f, g) = " + format_polynomial(dense_to_poly(ctx, r0)) +
                       " is not a unit");
    const Rational lead = r0[0];
    for (auto& c : u0) c /= lead;
    for (auto& c : v0) c /= lead;

    const Polynomial u = dense_to_poly(ctx, u0);
    const Polynomial v = dense_to_poly(ctx, v0);
    const Polynomial y = Polynomial::variable(ctx, 1);
    const Polynomial z = Polynomial::variable(ctx, 2);

    const Derivation d(ctx, {Polynomial::zero(ctx), f, g});
    const Polynomial slice = u * y + v * z;
    const std::array<Polynomial, 2> kernel_gens{Polynomial::variable(ctx, 0), g * y - f * z};

    if (!check_slice(d, slice).ok)
        throw InternalError("Euclidean cofactors failed to produce a slice");
    for (const auto& gen : kernel_gens)
        if (!d.apply(gen).is_zero())
            throw InternalError("rank-one kernel generator is not annihilated");

    return {d, slice, kernel_gens, f, g, u, v};
}

}  // namespace slicekit
