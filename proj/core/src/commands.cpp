#include "slicekit/commands.hpp"

#include <future>
#include <ostream>
#include <sstream>

#include "slicekit/action.hpp"
#include "slicekit/corpus.hpp"
#include "slicekit/groebner.hpp"
#include "slicekit/kernel.hpp"
#include "slicekit/linearize.hpp"
#include "slicekit/parse.hpp"

namespace slicekit {

namespace {

constexpr const char* kSignConventionNote =
    "sign convention: the formal flow exponentiates -lam*D, so the slice moves to s - lam; "
    "the opposite exponent sign would move it to s + lam";

std::string join_vars(const VarContext& ctx) {
    std::string out;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (i > 0) out += ", ";
        out += ctx.name(i);
    }
    return out;
}

std::string degrees_detail(const VarContext& ctx, const NilpotencyProbe& probe) {
    std::string out = "confirmed (";
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (i > 0) out += ", ";
        out += ctx.name(i) + ":" + std::to_string(probe.vanishing_degree[i]);
    }
    return out + ")";
}

void skip_rest_of_verify(Report& r, const std::string& why) {
    for (const auto* name :
         {"slice identity", "closed-form applicability", "flow translation identity",
          "flow action matches closed form", "expansion route agreement",
          "infinitesimal generator", "group law", "eigenvalue table"}) {
        bool already = false;
        for (const auto& line : r.checks()) already = already || line.name == name;
        if (!already) r.skip(name, why);
    }
}

// The checks shared by `verify` and the corpus runner.  Returns true when
// the gates needed by later stages (nilpotency + slice) held.
bool verify_pipeline(Report& r, const Derivation& d, const std::optional<Polynomial>& slice,
                     std::int64_t weight, const std::vector<Polynomial>& kernel_gens,
                     unsigned bound) {
    const VarContext& ctx = d.context();

    const auto probe = probe_nilpotency(d, bound);
    if (!probe.confirmed) {
        r.unknown("local nilpotency",
                  "not settled within " + std::to_string(bound) + " iterations (generator '" +
                      ctx.name(probe.survivor.value()) + "' still has a nonzero iterate)");
        skip_rest_of_verify(r, "needs confirmed local nilpotency");
        return false;
    }
    r.pass("local nilpotency", degrees_detail(ctx, probe));

    if (!slice) {
        skip_rest_of_verify(r, "no slice supplied");
        return false;
    }
    const Polynomial& s = *slice;

    const auto slice_check = check_slice(d, s);
    if (!slice_check.ok) {
        r.fail("slice identity", "D(s) - 1 = " + format_polynomial(slice_check.residual));
        skip_rest_of_verify(r, "needs a valid slice");
        return false;
    }
    r.pass("slice identity", "D(" + format_polynomial(s) + ") = 1");

    const auto nice = check_nice(d);
    if (nice.nice)
        r.pass("closed-form applicability", "D^2 annihilates every generator");
    else
        r.fail("closed-form applicability",
               "D^2(" + ctx.name(nice.witness.value()) +
                   ") = " + format_polynomial(nice.second_iterate));

    // Translation identity for P(S) = sum_k a_k S^k + S^r over the supplied
    // kernel generators.
    {
        std::vector<Polynomial> coeffs = kernel_gens;
        coeffs.push_back(Polynomial::one(ctx));
        try {
            const auto translation = check_translation_identity(d, s, coeffs, bound);
            if (translation.ok)
                r.pass("flow translation identity",
                       "exp(-lam*D) carries P(s) to P(s - lam) for the probe polynomial");
            else
                r.fail("flow translation identity",
                       "residual " + format_polynomial(translation.residual));
        } catch (const KernelMembershipError& e) {
            r.fail("flow translation identity", e.what());
        }
    }
    r.note(kSignConventionNote);

    const ActionImages action = flow_action(d, s, weight, bound);

    if (nice.nice) {
        const auto comparison = compare_actions(action, nice_action(d, s, weight));
        if (comparison.equal)
            r.pass("flow action matches closed form",
                   "x_i - (1 - t^N)*s*D(x_i) on all generators");
        else
            r.fail("flow action matches closed form",
                   "generator '" + ctx.name(comparison.witness.value()) + "' differs by " +
                       format_laurent(comparison.difference));
    } else {
        r.skip("flow action matches closed form", "closed form needs D^2 = 0 on generators");
    }

    {
        bool ok = true;
        std::string detail;
        std::vector<Polynomial> probes;
        for (std::size_t i = 0; i < ctx.size(); ++i)
            probes.push_back(Polynomial::variable(ctx, i));
        probes.push_back(s);
        for (const auto& b : probes) {
            const LaurentPoly via_expansion = weight_action(d, s, weight, b, bound);
            if (via_expansion != action.apply(b)) {
                ok = false;
                detail = "images of " + format_polynomial(b) + " differ";
                break;
            }
        }
        if (ok)
            r.pass("expansion route agreement",
                   "graded expansion and flow substitution agree on all probes");
        else
            r.fail("expansion route agreement", detail);
    }

    {
        const Derivation expected = semisimple_generator(d, s, weight);
        const Derivation derived = infinitesimal_generator(action);
        if (derived == expected)
            r.pass("infinitesimal generator", "d/dt at t = 1 recovers N*s*D");
        else
            r.fail("infinitesimal generator", "d/dt at t = 1 does not recover N*s*D");
    }

    {
        const auto law = check_group_law(d, s, weight, bound);
        if (law.ok)
            r.pass("group law", "acting by t then u equals acting by t*u");
        else
            r.fail("group law", law.detail);
    }

    if (kernel_gens.empty()) {
        r.skip("eigenvalue table", "no kernel generators supplied");
    } else {
        try {
            const auto table = eigenvalue_table(d, s, weight, kernel_gens, 5);
            if (table.all_ok) {
                r.pass("eigenvalue table", std::to_string(table.rows.size()) +
                                               " products a*s^m have exact eigenvalue N*m");
            } else {
                for (const auto& row : table.rows) {
                    if (row.ok) continue;
                    r.fail("eigenvalue table",
                           "a = " + format_polynomial(kernel_gens[row.element]) + ", m = " +
                               std::to_string(row.power) + " misses eigenvalue " +
                               to_string(row.eigenvalue));
                    break;
                }
            }
        } catch (const KernelMembershipError& e) {
            r.fail("eigenvalue table", e.what());
        }
    }

    return true;
}

// Normalization conditions + certificate; the caller has already verified
// the slice and nilpotency gates.
void linearize_pipeline(Report& r, const Derivation& d, const Polynomial& s, std::int64_t weight,
                        const AutomorphismPair& phi, const std::vector<Polynomial>& kernel_gens) {
    const VarContext& ctx = d.context();
    const std::string last = ctx.name(ctx.size() - 1);

    const auto strict = check_slice_coordinate(d, s, phi);
    if (strict.ok) {
        r.pass("slice becomes the last coordinate", "phi(s) = " + last);
    } else {
        std::string detail;
        if (!strict.conjugate_ok)
            detail = "conjugate differs from d/d" + last + " on generator '" +
                     ctx.name(strict.conjugate_witness.value()) + "'";
        else
            detail = "phi(s) - " + last + " = " + format_polynomial(strict.slice_residual) +
                     "; trying the affine condition";
        r.skip("slice becomes the last coordinate", detail);
    }

    const auto affine = check_slice_affine(d, s, phi);
    if (affine.ok) {
        r.pass("slice becomes the last coordinate plus a kernel offset",
               "offset p = " + format_polynomial(affine.offset));
    } else {
        std::string detail;
        if (!affine.conjugate_ok)
            detail = "conjugate differs from d/d" + last + " on generator '" +
                     ctx.name(affine.conjugate_witness.value()) + "' by " +
                     format_polynomial(affine.conjugate_residual);
        else
            detail = "phi(s) - " + last + " = " + format_polynomial(affine.offset) +
                     " still involves " + last;
        r.fail("slice becomes the last coordinate plus a kernel offset", detail);
    }

    if (!affine.ok) {
        r.skip("linearization certificate", "needs the affine normalization condition");
        r.skip("diagonal factorization", "needs the linearization certificate");
    } else {
        const LinearizationCertificate cert = build_linearization(d, s, weight, phi);
        r.pass("linearization certificate",
               "psi conjugates N*s*D to " + std::to_string(weight) + "*" + last + "*d/d" + last +
                   " and psi(s) = " + last +
                   (cert.route == LinearizationRoute::SliceCoordinate
                        ? " (slice was already a coordinate)"
                        : " (offset removed by a triangular shear)"));
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            r.attach("psi." + ctx.name(i), format_polynomial(cert.psi.forward().image(i)));
            r.attach("psi_inv." + ctx.name(i), format_polynomial(cert.psi.inverse().image(i)));
        }
        r.attach("offset", format_polynomial(cert.offset));
        for (std::size_t i = 0; i < ctx.size(); ++i)
            r.attach("diagonal." + ctx.name(i), format_polynomial(cert.diagonal.image(i)));

        // psi(s) is exactly the last coordinate, so the diagonal form factors
        // as N * x_n * d/dx_n; normalize that factorization as a round trip.
        std::vector<Rational> eigenvalues(ctx.size(), Rational(0));
        eigenvalues.back() = Rational(static_cast<long>(weight));
        const auto outcome = normalize_diagonal_factorization(
            eigenvalues, cert.psi.forward().apply(s), Derivation::coordinate(ctx, ctx.size() - 1),
            weight);
        if (outcome.ok())
            r.pass("diagonal factorization",
                   "pivot '" + ctx.name(outcome.form->pivot) + "', scaling " +
                       to_string(outcome.form->scaling));
        else
            r.fail("diagonal factorization", outcome.error->detail);
    }

    if (kernel_gens.empty()) {
        r.skip("kernel criterion", "no kernel generators supplied");
    } else {
        const auto criterion = check_kernel_criterion(d, s, phi, kernel_gens);
        auto clause = [&r](const char* name, const KernelCriterionClause& c) {
            if (c.ok)
                r.pass(name);
            else
                r.fail(name, c.witness);
        };
        clause("kernel criterion: generators avoid the last coordinate",
               criterion.generators_descend);
        clause("kernel criterion: slice is affine in the last coordinate", criterion.slice_affine);
        clause("kernel criterion: conjugate is the coordinate derivation",
               criterion.conjugate_coordinate);
        r.note(criterion.note);
    }
}

void ideal_pipeline(Report& r, const Derivation& d, const std::vector<Polynomial>& ideal_gens,
                    unsigned degree) {
    const GroebnerBasis basis = buchberger(ideal_gens, MonomialOrder::grlex(d.context().size()));
    r.pass("groebner basis",
           std::to_string(basis.generators().size()) + " reduced generator(s) under graded lex");
    for (std::size_t k = 0; k < basis.generators().size(); ++k)
        r.attach("groebner." + std::to_string(k), format_polynomial(basis.generators()[k]));

    const auto descent = derivation_descends(d, basis);
    if (!descent.ok) {
        r.fail("derivation descends",
               "generator " + std::to_string(descent.witness.value()) + " maps to residue " +
                   format_polynomial(descent.residual));
        r.skip("quotient kernel basis", "needs a descending derivation");
        return;
    }
    r.pass("derivation descends", "every ideal generator maps into the ideal");

    const auto kernel = quotient_kernel_basis(d, basis, degree);
    r.pass("quotient kernel basis",
           "dimension " + std::to_string(kernel.size()) + " at residue degree <= " +
               std::to_string(degree));
    for (std::size_t k = 0; k < kernel.size(); ++k)
        r.attach("quotient_kernel." + std::to_string(k), format_polynomial(kernel[k]));
    r.note("degree-bounded: only kernel classes with standard-monomial degree <= " +
           std::to_string(degree) + " are listed");
}

void kernel_pipeline(Report& r, const std::vector<Derivation>& family, unsigned degree) {
    if (family.size() == 1) {
        const KernelBasis basis = kernel_basis(family.front(), degree);
        r.pass("kernel basis", "dimension " + std::to_string(basis.elements.size()) +
                                   " at degree <= " + std::to_string(degree) + " (matrix " +
                                   std::to_string(basis.matrix_rows) + " x " +
                                   std::to_string(basis.matrix_cols) + ")");
        for (std::size_t k = 0; k < basis.elements.size(); ++k)
            r.attach("kernel." + std::to_string(k), format_polynomial(basis.elements[k]));
        bool sound = true;
        for (const auto& e : basis.elements)
            sound = sound && family.front().apply(e).is_zero();
        if (sound)
            r.pass("kernel soundness", "every basis element is annihilated (rechecked)");
        else
            r.fail("kernel soundness", "a basis element is not annihilated");
        return;
    }

    for (std::size_t k = 0; k < family.size(); ++k) {
        const KernelBasis basis = kernel_basis(family[k], degree);
        r.pass("kernel dimension (derivation " + std::to_string(k + 1) + ")",
               std::to_string(basis.elements.size()) + " at degree <= " + std::to_string(degree));
    }
    const auto obstruction = ml_obstruction_report(family, degree);
    r.pass("kernel intersection",
           "dimension " + std::to_string(obstruction.intersection.elements.size()) +
               " at degree <= " + std::to_string(degree));
    for (std::size_t k = 0; k < obstruction.intersection.elements.size(); ++k)
        r.attach("intersection." + std::to_string(k),
                 format_polynomial(obstruction.intersection.elements[k]));
    if (obstruction.witness)
        r.pass("nonconstant common invariant", "found: " + format_polynomial(*obstruction.witness));
    else
        r.pass("nonconstant common invariant",
               "none within degree <= " + std::to_string(degree) + " (inconclusive beyond)");
    r.note(obstruction.caveat);
}

Report corpus_entry_report(const CorpusEntry& entry, const RunOptions& options) {
    Report r(entry.name);
    const unsigned bound = options.nilpotency_bound.value_or(entry.spec.nilpotency_bound);
    const Derivation d = entry.spec.derivation();

    if (entry.quotient) {
        const unsigned degree = options.degree_bound.value_or(entry.spec.degree_bound);
        ideal_pipeline(r, d, entry.spec.ideal_generators, degree);

        const GroebnerBasis basis =
            buchberger(entry.spec.ideal_generators, MonomialOrder::grlex(d.context().size()));
        bool contains_x = false;
        for (const auto& e : quotient_kernel_basis(d, basis, degree))
            contains_x = contains_x || e == Polynomial::variable(d.context(), 0);
        if (contains_x)
            r.pass("quotient kernel contains x", "the class of x is invariant");
        else
            r.fail("quotient kernel contains x");

        const Derivation rejected(d.context(), entry.rejected_derivation_images);
        const auto rejection = derivation_descends(rejected, basis);
        if (!rejection.ok)
            r.pass("non-invariant derivation rejected",
                   "residue " + format_polynomial(rejection.residual) + " on generator " +
                       std::to_string(rejection.witness.value()));
        else
            r.fail("non-invariant derivation rejected", "expected a nonzero residue");
        return r;
    }

    const bool gates_ok = verify_pipeline(r, d, entry.spec.slice, entry.spec.weight,
                                          entry.spec.kernel_generators, bound);
    if (!gates_ok) return r;

    const Polynomial& s = *entry.spec.slice;
    if (entry.spec.has_automorphism()) {
        const AutomorphismPair phi = entry.spec.automorphism();
        linearize_pipeline(r, d, s, entry.spec.weight, phi, entry.spec.kernel_generators);

        for (const auto& a : entry.spec.kernel_generators) {
            const SliceShift shift = shift_slice(d, s, a, entry.spec.weight, bound);
            r.pass("slice shift by " + format_polynomial(a),
                   "slice moves to " + format_polynomial(shift.shifted_slice) +
                       "; conjugated generator is N*(s - a)*D");
            const AutomorphismPair moved = compose(phi, shift.flow.inverted());
            const LinearizationCertificate cert =
                build_linearization(d, shift.shifted_slice, entry.spec.weight, moved);
            r.pass("relinearize after shift by " + format_polynomial(a),
                   "offset p = " + format_polynomial(cert.offset));
        }
    }
    return r;
}

unsigned effective_bound(const ProblemSpec& spec, const RunOptions& options) {
    return options.nilpotency_bound.value_or(spec.nilpotency_bound);
}

}  // namespace

Report run_verify(const ProblemSpec& spec, const RunOptions& options) {
    Report r("verify");
    r.attach("ring", join_vars(spec.ctx));
    r.attach("N", std::to_string(spec.weight));
    verify_pipeline(r, spec.derivation(), spec.slice, spec.weight, spec.kernel_generators,
                    effective_bound(spec, options));
    return r;
}

Report run_linearize(const ProblemSpec& spec, const RunOptions& options) {
    if (!spec.slice) throw ProblemFormatError("linearize needs a [slice] table");
    if (!spec.has_automorphism())
        throw ProblemFormatError("linearize needs [phi] and [phi_inv] tables");

    Report r("linearize");
    r.attach("ring", join_vars(spec.ctx));
    r.attach("N", std::to_string(spec.weight));
    const Derivation d = spec.derivation();
    const unsigned bound = effective_bound(spec, options);

    const auto probe = probe_nilpotency(d, bound);
    if (!probe.confirmed) {
        r.unknown("local nilpotency",
                  "not settled within " + std::to_string(bound) + " iterations");
        return r;
    }
    r.pass("local nilpotency", degrees_detail(spec.ctx, probe));

    const auto slice_check = check_slice(d, *spec.slice);
    if (!slice_check.ok) {
        r.fail("slice identity", "D(s) - 1 = " + format_polynomial(slice_check.residual));
        return r;
    }
    r.pass("slice identity", "D(" + format_polynomial(*spec.slice) + ") = 1");

    try {
        const AutomorphismPair phi = spec.automorphism();
        r.pass("automorphism pair", "phi and phi_inv are mutually inverse");
        linearize_pipeline(r, d, *spec.slice, spec.weight, phi, spec.kernel_generators);
    } catch (const NotInverseError& e) {
        r.fail("automorphism pair", e.what());
    }
    return r;
}

Report run_kernel(const ProblemSpec& spec, const RunOptions& options) {
    Report r("kernel");
    r.attach("ring", join_vars(spec.ctx));
    const unsigned degree = options.degree_bound.value_or(spec.degree_bound);

    if (options.use_ideal) {
        if (spec.ideal_generators.empty())
            throw ProblemFormatError("kernel --ideal needs a nonempty [ideal] table");
        ideal_pipeline(r, spec.derivation(), spec.ideal_generators, degree);
        return r;
    }

    kernel_pipeline(r, spec.derivation_family(), degree);
    return r;
}

Report run_corpus(bool list_only, const RunOptions& options) {
    Report r("corpus");
    const auto& entries = builtin_corpus();

    if (list_only) {
        for (const auto& entry : entries) r.pass(entry.name, entry.description);
        return r;
    }

    std::vector<std::future<Report>> futures;
    futures.reserve(entries.size());
    for (const auto& entry : entries)
        futures.push_back(std::async(std::launch::async,
                                     [&entry, &options] { return corpus_entry_report(entry, options); }));
    for (std::size_t k = 0; k < entries.size(); ++k) {
        try {
            r.absorb(entries[k].name, futures[k].get());
        } catch (const Error& e) {
            r.fail(entries[k].name + "/entry", e.what());
        }
    }
    return r;
}

int emit(const Report& report, std::ostream& os, const RunOptions& options) {
    if (options.json_only) {
        os << report.render_json() << "\n";
    } else {
        os << report.render_text(options.quiet);
        os << "```json\n" << report.render_json() << "\n```\n";
    }
    return report.exit_code();
}

}  // namespace slicekit
