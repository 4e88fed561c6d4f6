// Acceptance harness: one line per criterion, exit 0 iff all pass.
// Everything here is exact arithmetic; there are no tolerances.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "slicekit/commands.hpp"
#include "slicekit/corpus.hpp"
#include "slicekit/groebner.hpp"
#include "slicekit/kernel.hpp"
#include "slicekit/linearize.hpp"
#include "slicekit/parse.hpp"

using namespace slicekit;

namespace {

int failures = 0;

void line(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%2d. %s: %s%s%s\n", index, name.c_str(), ok ? "pass" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

// A random nice triangular derivation with slice: one variable carries image
// 1 (the slice), a set Z of variables carries image 0, and every other
// variable carries a random polynomial of degree <= 3 in the earlier members
// of Z.  Such a derivation is triangular, locally nilpotent, and D^2 kills
// every generator.
struct Sample {
    VarContext ctx;
    Derivation d;
    Polynomial s;
    std::int64_t N;
};

Polynomial random_kernel_poly(const VarContext& ctx, const std::vector<std::size_t>& zeros,
                              std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> deg(0, 3);
    Polynomial p = Polynomial::constant(ctx, Rational(coeff(rng)));
    if (zeros.empty()) return p;
    std::uniform_int_distribution<std::size_t> pick(0, zeros.size() - 1);
    for (int t = 0; t < 3; ++t) {
        std::vector<std::uint32_t> exps(ctx.size(), 0);
        const unsigned budget = deg(rng);
        for (unsigned u = 0; u < budget; ++u) exps[zeros[pick(rng)]] += 1;
        p += Polynomial::from_monomial(ctx, Monomial(exps), Rational(coeff(rng)));
    }
    return p;
}

Sample random_sample(std::size_t n, std::int64_t N, std::mt19937_64& rng) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    VarContext ctx(names);

    std::uniform_int_distribution<std::size_t> pick_slice(1, n - 1);
    const std::size_t slice_var = n == 1 ? 0 : pick_slice(rng);
    std::vector<std::size_t> zeros = {0};  // the first variable is always constant

    std::vector<Polynomial> images(n, Polynomial::zero(ctx));
    std::bernoulli_distribution also_zero(0.3);
    for (std::size_t i = 1; i < n; ++i) {
        if (i == slice_var) {
            images[i] = Polynomial::one(ctx);
        } else if (also_zero(rng)) {
            zeros.push_back(i);
        } else {
            std::vector<std::size_t> earlier;
            for (std::size_t z : zeros)
                if (z < i) earlier.push_back(z);
            images[i] = random_kernel_poly(ctx, earlier, rng);
        }
    }
    Derivation d(ctx, images);
    return {ctx, d, Polynomial::variable(ctx, slice_var), N};
}

Polynomial random_poly_of_degree(const VarContext& ctx, unsigned degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<unsigned> deg(0, degree);
    std::uniform_int_distribution<std::size_t> var(0, ctx.size() - 1);
    Polynomial p = Polynomial::zero(ctx);
    for (int t = 0; t < 6; ++t) {
        std::vector<std::uint32_t> exps(ctx.size(), 0);
        const unsigned budget = deg(rng);
        for (unsigned u = 0; u < budget; ++u) exps[var(rng)] += 1;
        p += Polynomial::from_monomial(ctx, Monomial(exps), Rational(coeff(rng)));
    }
    return p;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

// The action obtained by substituting lam := (t^N - 1) * s — the wrong sign —
// into the formal flow.  Used by the mutation criterion.
ActionImages flipped_flow_action(const Derivation& d, const Polynomial& s, std::int64_t N) {
    const Endomorphism flow = formal_exponential(d);
    const VarContext& ctx = d.context();
    std::vector<LaurentPoly> images;
    for (std::size_t i = 0; i < ctx.size(); ++i)
        images.push_back(LaurentPoly::from_poly(Polynomial::variable(ctx, i)));
    images.push_back(LaurentPoly::term(s, N) + LaurentPoly::term(-s, 0));
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < ctx.size(); ++i)
        out.push_back(evaluate<LaurentPoly>(flow.image(i), images, LaurentPoly::one(ctx)));
    return ActionImages(ctx, out);
}

std::vector<const CorpusEntry*> ring_entries() {
    std::vector<const CorpusEntry*> out;
    for (const auto& entry : builtin_corpus())
        if (!entry.quotient) out.push_back(&entry);
    return out;
}

}  // namespace

int main() {
    std::mt19937_64 rng(0x5eed5eed);
    const std::int64_t weights[] = {-2, -1, 1, 2, 3};

    // Shared random sample set for criteria 1 and 2.
    std::vector<Sample> samples;
    for (int k = 0; k < 30; ++k)
        samples.push_back(random_sample(2 + k % 3, weights[k % 5], rng));

    {
        bool ok = true;
        for (const auto& sample : samples) {
            const auto cmp = compare_actions(nice_action(sample.d, sample.s, sample.N),
                                             flow_action(sample.d, sample.s, sample.N));
            ok = ok && cmp.equal;
        }
        line(1, "closed-form action equals flow substitution on 30 random samples", ok);
    }

    {
        bool ok = true;
        for (const auto& sample : samples) {
            const ActionImages beta = flow_action(sample.d, sample.s, sample.N);
            ok = ok && (infinitesimal_generator(beta) ==
                        semisimple_generator(sample.d, sample.s, sample.N));
        }
        line(2, "infinitesimal generator recovers N*s*D on the same samples", ok);
    }

    {
        bool ok = true;
        std::size_t total = 0;
        for (const auto* entry : ring_entries()) {
            const Derivation d = entry->spec.derivation();
            const Polynomial& s = *entry->spec.slice;
            for (int t = 0; t < 13; ++t) {
                const Polynomial b = random_poly_of_degree(d.context(), 6, rng);
                ++total;
                const auto a = slice_expansion(d, s, b);
                Polynomial rebuilt = Polynomial::zero(d.context());
                for (std::size_t i = 0; i < a.size(); ++i) {
                    ok = ok && d.apply(a[i]).is_zero();
                    rebuilt += a[i] * s.powered(static_cast<std::uint32_t>(i));
                }
                ok = ok && rebuilt == b;
                const auto da = slice_expansion(d, s, d.apply(b));
                for (std::size_t i = 0; i + 1 < a.size(); ++i) {
                    const Polynomial expected = a[i + 1] * Rational(static_cast<long>(i + 1));
                    const Polynomial actual =
                        i < da.size() ? da[i] : Polynomial::zero(d.context());
                    ok = ok && actual == expected;
                }
            }
        }
        line(3, "slice expansion reconstructs " + std::to_string(total) +
                    " random elements and matches the derivative shift",
             ok);
    }

    {
        bool ok = true;
        for (const auto* entry : ring_entries()) {
            const Derivation d = entry->spec.derivation();
            const Polynomial& s = *entry->spec.slice;
            const std::int64_t N = entry->spec.weight;
            const auto& gens = entry->spec.kernel_generators;
            if (gens.empty()) continue;
            const auto table = eigenvalue_table(d, s, N, gens, 5);
            ok = ok && table.all_ok;
            const Derivation partial = semisimple_generator(d, s, N);
            for (const auto& row : table.rows) {
                ok = ok && row.eigenvalue == Rational(static_cast<long>(N)) *
                                                 Rational(static_cast<long>(row.power));
                const Polynomial element = gens[row.element] * s.powered(row.power);
                ok = ok && partial.apply(element) == element * row.eigenvalue;
            }
        }
        line(4, "eigenvalue N*m on a*s^m for all corpus kernel generators, m <= 5", ok);
    }

    {
        bool ok = true;
        for (const auto* entry : ring_entries()) {
            const Derivation d = entry->spec.derivation();
            const Polynomial& s = *entry->spec.slice;
            const std::int64_t N = entry->spec.weight;
            ok = ok && check_group_law(d, s, N).ok;
            const ActionImages action = flow_action(d, s, N);
            for (std::size_t i = 0; i < d.context().size(); ++i)
                ok = ok &&
                     action.image(i).eval_at_one() == Polynomial::variable(d.context(), i);
        }
        line(5, "group law and unit law hold on every corpus entry", ok);
    }

    {
        bool ok = true;
        bool saw_offset_route = false;
        for (const auto* entry : ring_entries()) {
            const Derivation d = entry->spec.derivation();
            const Polynomial& s = *entry->spec.slice;
            const std::int64_t N = entry->spec.weight;
            const AutomorphismPair phi = entry->spec.automorphism();
            const LinearizationCertificate cert = build_linearization(d, s, N, phi);
            // Independent re-verification of both certificate identities.
            const std::size_t last = d.context().size() - 1;
            ok = ok && cert.psi.forward().apply(s) == Polynomial::variable(d.context(), last);
            ok = ok && conjugate(cert.psi, semisimple_generator(d, s, N)) == cert.diagonal;
            if (entry->name == "dim2_offset_slice") {
                saw_offset_route = cert.route == LinearizationRoute::SliceAffine &&
                                   cert.offset == parse_polynomial("x^2", d.context());
            }
        }
        line(6, "linearization certificates build and re-verify on all ring entries", ok && saw_offset_route);
    }

    {
        bool ok = true;
        VarContext ctx({"x", "y", "z"});
        // Accepts every single-nonzero-eigenvalue position.
        for (std::size_t pivot = 0; pivot < 3; ++pivot) {
            std::vector<Rational> spectrum(3, Rational(0));
            spectrum[pivot] = Rational(2);
            const Polynomial sigma = Polynomial::variable(ctx, pivot) * Rational(5);
            std::vector<Polynomial> images(3, Polynomial::zero(ctx));
            images[pivot] = Polynomial::constant(ctx, make_rational(1, 5));
            const auto outcome =
                normalize_diagonal_factorization(spectrum, sigma, Derivation(ctx, images), 2);
            ok = ok && outcome.ok() && outcome.form->pivot == pivot &&
                 outcome.form->scaling == 5;
            if (!outcome.ok()) continue;
            // Round trip: the normalized triple normalizes to itself.
            std::vector<Rational> standard(3, Rational(0));
            standard.back() = Rational(2);
            const auto again = normalize_diagonal_factorization(
                standard, Polynomial::variable(ctx, 2), Derivation::coordinate(ctx, 2), 2);
            ok = ok && again.ok() && again.form->scaling == 1 &&
                 again.form->normalizer.forward().is_identity();
        }
        // Rejects two nonzero eigenvalues with the designated error.
        const std::vector<Rational> two = {Rational(1), Rational(1), Rational(0)};
        const auto rejected = normalize_diagonal_factorization(
            two, Polynomial::variable(ctx, 0), Derivation::coordinate(ctx, 0), 1);
        ok = ok && !rejected.ok() &&
             rejected.error->kind == FactorizationError::Kind::TwoNonzeroEigenvalues;
        line(7, "diagonal factorization accepts single-pivot spectra and rejects double ones", ok);
    }

    {
        bool ok = true;
        for (const auto* entry : ring_entries()) {
            const Derivation d = entry->spec.derivation();
            const Polynomial& s = *entry->spec.slice;
            const std::int64_t N = entry->spec.weight;
            const AutomorphismPair phi = entry->spec.automorphism();
            for (const auto& a : entry->spec.kernel_generators) {
                const SliceShift shift = shift_slice(d, s, a, N);
                ok = ok && shift.shifted_slice == s - a;
                ok = ok && conjugate(shift.flow, d) == d;
                ok = ok && shift.conjugated == semisimple_generator(d, s - a, N);
                const AutomorphismPair moved = compose(phi, shift.flow.inverted());
                const LinearizationCertificate cert =
                    build_linearization(d, shift.shifted_slice, N, moved);
                const std::size_t last = d.context().size() - 1;
                ok = ok && cert.psi.forward().apply(shift.shifted_slice) ==
                               Polynomial::variable(d.context(), last);
            }
        }
        line(8, "slice shifts preserve the derivation, the weights, and linearizability", ok);
    }

    {
        bool ok = true;
        for (std::size_t n = 1; n <= 4; ++n) {
            std::vector<std::string> names;
            for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
            VarContext ctx(names);
            const Derivation d = Derivation::coordinate(ctx, n - 1);
            for (unsigned deg = 1; deg <= 6; ++deg)
                ok = ok && kernel_basis(d, deg).elements.size() == binomial(n - 1 + deg, deg);
        }

        VarContext ctx({"x", "y", "z"});
        const WangData wang =
            wang_normal_form(parse_polynomial("x", ctx), parse_polynomial("1", ctx));
        const KernelBasis basis = kernel_basis(wang.derivation, 4);
        std::size_t expected = 0;
        for (unsigned a = 0; a <= 4; ++a)
            for (unsigned b = 0; a + 2 * b <= 4; ++b) {
                ++expected;
                const Polynomial product = wang.kernel_generators[0].powered(a) *
                                           wang.kernel_generators[1].powered(b);
                ok = ok && wang.derivation.apply(product).is_zero();
            }
        ok = ok && basis.elements.size() == expected;

        const std::vector<Derivation> partials = {
            Derivation::coordinate(ctx, 0), Derivation::coordinate(ctx, 1),
            Derivation::coordinate(ctx, 2)};
        const auto obstruction = ml_obstruction_report(partials, 4);
        ok = ok && obstruction.intersection.elements.size() == 1 && !obstruction.witness;
        line(9, "kernel dimensions match the counting oracles and partials share only constants",
             ok);
    }

    {
        VarContext ctx({"x", "y", "z"});
        const GroebnerBasis basis = buchberger(
            std::vector<Polynomial>{parse_polynomial("x^2*z - y^2", ctx)},
            MonomialOrder::grlex(3));
        const Derivation good(ctx, {parse_polynomial("0", ctx), parse_polynomial("x^2", ctx),
                                    parse_polynomial("2*y", ctx)});
        const Derivation bad = Derivation::coordinate(ctx, 0);
        const auto accepted = derivation_descends(good, basis);
        const auto rejected = derivation_descends(bad, basis);
        const auto kernel = quotient_kernel_basis(good, basis, 1);
        bool contains_x = false;
        for (const auto& e : kernel) contains_x = contains_x || e == Polynomial::variable(ctx, 0);
        const bool ok =
            accepted.ok && !rejected.ok && !rejected.residual.is_zero() && contains_x;
        line(10, "quotient checks accept the invariant ideal pair and reject d/dx", ok,
             "rejection residual " + format_polynomial(rejected.residual));
    }

    {
        // Mutation 1: flipping the sign of the lam-substitution must break
        // the action equality with a nonzero difference.
        VarContext ctx({"x", "y", "z"});
        const Derivation d(ctx, {parse_polynomial("0", ctx), parse_polynomial("x", ctx),
                                 parse_polynomial("1", ctx)});
        const Polynomial s = parse_polynomial("z", ctx);
        const auto cmp = compare_actions(nice_action(d, s, 2), flipped_flow_action(d, s, 2));
        bool ok = !cmp.equal && !cmp.difference.is_zero();

        // Mutation 2: building tau with +p instead of -p must break both
        // certificate identities.
        VarContext cxy({"x", "y"});
        const Derivation dy(cxy, {parse_polynomial("0", cxy), parse_polynomial("1", cxy)});
        const Polynomial slice = parse_polynomial("y + x^2", cxy);
        std::vector<Polynomial> tau_images = {Polynomial::variable(cxy, 0),
                                              parse_polynomial("y + x^2", cxy)};
        const AutomorphismPair tau = invert_triangular(Endomorphism(cxy, tau_images));
        const Polynomial slid = tau.forward().apply(slice) - Polynomial::variable(cxy, 1);
        ok = ok && !slid.is_zero();
        const Derivation conjugated = conjugate(tau, semisimple_generator(dy, slice, 3));
        std::vector<Rational> spectrum = {Rational(0), Rational(3)};
        ok = ok && conjugated != Derivation::diagonal(cxy, spectrum);
        line(11, "mutated flows and mutated shears leave nonzero residuals", ok);
    }

    if (failures == 0) {
        std::printf("acceptance: all criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
