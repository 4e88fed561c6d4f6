#include "slicekit/flow.hpp"

#include "slicekit/parse.hpp"

namespace slicekit {

namespace {

void require_locally_nilpotent(const Derivation& d, unsigned bound) {
    const auto probe = probe_nilpotency(d, bound);
    if (!probe.confirmed)
        throw NilpotencyError("local nilpotency not confirmed within " + std::to_string(bound) +
                              " iterations (generator '" +
                              d.context().name(probe.survivor.value()) + "' survives)");
}

void require_in_kernel(const Derivation& d, const Polynomial& f, std::size_t index,
                       const std::string& role) {
    const Polynomial image = d.apply(f);
    if (!image.is_zero())
        throw KernelMembershipError(index, role + " is not annihilated by the derivation: D(" +
                                               format_polynomial(f) + ") = " +
                                               format_polynomial(image));
}

}  // namespace

Endomorphism exp_derivation(const Derivation& d, const Polynomial& f, unsigned bound) {
    require_same_context(d.context(), f.context());
    require_locally_nilpotent(d, bound);
    require_in_kernel(d, f, 0, "flow time");

    const VarContext& ctx = d.context();
    std::vector<Polynomial> images;
    images.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        Polynomial acc = Polynomial::zero(ctx);
        Polynomial iterate = Polynomial::variable(ctx, i);
        Polynomial fpow = Polynomial::one(ctx);
        unsigned j = 0;
        while (!iterate.is_zero()) {
            acc += fpow * iterate * Rational(Integer(1), factorial(j));
            iterate = d.apply(iterate);
            fpow = fpow * f;
            ++j;
        }
        images.push_back(std::move(acc));
    }
    return Endomorphism(ctx, std::move(images));
}

AutomorphismPair exp_automorphism(const Derivation& d, const Polynomial& f, unsigned bound) {
    return verify_automorphism(exp_derivation(d, f, bound), exp_derivation(d, -f, bound));
}

Endomorphism formal_exponential(const Derivation& d, unsigned bound) {
    require_locally_nilpotent(d, bound);

    const VarContext extended = d.context().extended(kFlowParameter);
    const std::size_t n = d.context().size();
    const Polynomial lam = Polynomial::variable(extended, n);

    std::vector<Polynomial> images;
    images.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial acc = Polynomial::zero(extended);
        Polynomial iterate = Polynomial::variable(d.context(), i);
        Polynomial lampow = Polynomial::one(extended);
        unsigned j = 0;
        while (!iterate.is_zero()) {
            acc += lampow * iterate.embedded(extended) * Rational(Integer(1), factorial(j));
            iterate = d.apply(iterate);
            lampow = lampow * -lam;
            ++j;
        }
        images.push_back(std::move(acc));
    }
    images.push_back(lam);
    return Endomorphism(extended, std::move(images));
}

TranslationCheck check_translation_identity(const Derivation& d, const Polynomial& s,
                                            std::span<const Polynomial> coeffs, unsigned bound) {
    require_same_context(d.context(), s.context());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        require_in_kernel(d, coeffs[k], k, "coefficient " + std::to_string(k));

    const Endomorphism flow = formal_exponential(d, bound);
    const VarContext& extended = flow.context();
    const std::size_t n = d.context().size();
    const Polynomial lam = Polynomial::variable(extended, n);
    const Polynomial shifted = s.embedded(extended) - lam;

    // P(s), then both sides of exp(-lam*D)(P(s)) = P(s - lam).
    Polynomial value = Polynomial::zero(d.context());
    Polynomial translated = Polynomial::zero(extended);
    Polynomial spow = Polynomial::one(d.context());
    Polynomial shifted_pow = Polynomial::one(extended);
    for (const auto& c : coeffs) {
        require_same_context(d.context(), c.context());
        value += c * spow;
        translated += c.embedded(extended) * shifted_pow;
        spow = spow * s;
        shifted_pow = shifted_pow * shifted;
    }

    const Polynomial residual = flow.apply(value.embedded(extended)) - translated;
    return {residual.is_zero(), residual};
}

Polynomial kernel_projection(const Derivation& d, const Polynomial& s, const Polynomial& b,
                             unsigned bound) {
    require_same_context(d.context(), s.context());
    require_same_context(d.context(), b.context());
    require_locally_nilpotent(d, bound);
    const auto slice = check_slice(d, s);
    if (!slice.ok)
        throw SliceError("not a slice: D(s) - 1 = " + format_polynomial(slice.residual));

    Polynomial acc = Polynomial::zero(d.context());
    Polynomial iterate = b;
    Polynomial spow = Polynomial::one(d.context());
    unsigned j = 0;
    while (!iterate.is_zero()) {
        acc += spow * iterate * Rational(Integer(1), factorial(j));
        iterate = d.apply(iterate);
        spow = spow * -s;
        ++j;
    }

    if (!d.apply(acc).is_zero())
        throw InternalError("kernel projection produced a value outside ker D");
    return acc;
}

std::vector<Polynomial> slice_expansion(const Derivation& d, const Polynomial& s,
                                        const Polynomial& b, unsigned bound) {
    require_same_context(d.context(), s.context());
    require_same_context(d.context(), b.context());

    std::vector<Polynomial> coeffs;
    Polynomial iterate = b;
    unsigned i = 0;
    do {
        coeffs.push_back(kernel_projection(d, s, iterate, bound) *
                         Rational(Integer(1), factorial(i)));
        iterate = d.apply(iterate);
        ++i;
    } while (!iterate.is_zero());

    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();

    // Re-verify the finite expansion b = sum a_i s^i.
    Polynomial reconstructed = Polynomial::zero(d.context());
    Polynomial spow = Polynomial::one(d.context());
    for (const auto& a : coeffs) {
        reconstructed += a * spow;
        spow = spow * s;
    }
    if (reconstructed != b)
        throw InternalError("slice expansion failed to reconstruct its input");
    return coeffs;
}

}  // namespace slicekit
