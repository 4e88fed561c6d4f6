#include "slicekit/action.hpp"

#include "slicekit/parse.hpp"

namespace slicekit {

ActionImages::ActionImages(VarContext ctx, std::vector<LaurentPoly> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
    if (images_.size() != ctx_.size())
        throw ContextMismatchError("action needs one image per ring variable");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        require_same_context(ctx_, images_[i].context());
        if (images_[i].eval_at_one() != Polynomial::variable(ctx_, i))
            throw NotActionError(i, "candidate action does not specialize to the identity at "
                                    "t = 1 on generator '" +
                                        ctx_.name(i) + "'");
    }
}

const LaurentPoly& ActionImages::image(std::size_t i) const {
    if (i >= images_.size()) throw IndexError("generator index out of range");
    return images_[i];
}

LaurentPoly ActionImages::apply(const Polynomial& b) const {
    require_same_context(ctx_, b.context());
    return evaluate(b, std::span<const LaurentPoly>(images_), LaurentPoly::one(ctx_));
}

namespace {

void require_nonzero_weight(std::int64_t N) {
    if (N == 0) throw Error("the action weight N must be a nonzero integer");
}

void require_slice(const Derivation& d, const Polynomial& s) {
    const auto slice = check_slice(d, s);
    if (!slice.ok)
        throw SliceError("not a slice: D(s) - 1 = " + format_polynomial(slice.residual));
}

}  // namespace

Derivation semisimple_generator(const Derivation& d, const Polynomial& s, std::int64_t N) {
    require_nonzero_weight(N);
    require_slice(d, s);
    return d.scaled(s * Rational(static_cast<long>(N)));
}

LaurentPoly weight_action(const Derivation& d, const Polynomial& s, std::int64_t N,
                          const Polynomial& b, unsigned bound) {
    require_nonzero_weight(N);
    require_slice(d, s);
    const auto coeffs = slice_expansion(d, s, b, bound);
    LaurentPoly acc = LaurentPoly::zero(d.context());
    Polynomial spow = Polynomial::one(d.context());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        acc += LaurentPoly::term(coeffs[i] * spow, N * static_cast<std::int64_t>(i));
        spow = spow * s;
    }
    return acc;
}

ActionImages nice_action(const Derivation& d, const Polynomial& s, std::int64_t N) {
    require_nonzero_weight(N);
    require_slice(d, s);
    const auto nice = check_nice(d);
    if (!nice.nice)
        throw NotNiceError(nice.witness.value(),
                           "closed form needs D^2(x_i) = 0 for all i; D^2(" +
                               d.context().name(nice.witness.value()) + ") = " +
                               format_polynomial(nice.second_iterate));

    const VarContext& ctx = d.context();
    std::vector<LaurentPoly> images;
    images.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        // x_i - (1 - t^N) * s * D(x_i)
        LaurentPoly im = LaurentPoly::from_poly(Polynomial::variable(ctx, i) - s * d.image(i));
        im += LaurentPoly::term(s * d.image(i), N);
        images.push_back(std::move(im));
    }
    return ActionImages(ctx, std::move(images));
}

ActionImages flow_action(const Derivation& d, const Polynomial& s, std::int64_t N,
                         unsigned bound) {
    require_nonzero_weight(N);
    require_slice(d, s);

    const Endomorphism flow = formal_exponential(d, bound);
    const VarContext& ctx = d.context();
    const std::size_t n = ctx.size();

    // lam := (1 - t^N) * s, evaluated in Q[x][t,1/t].
    LaurentPoly lam_value = LaurentPoly::from_poly(s) - LaurentPoly::term(s, N);
    std::vector<LaurentPoly> substitution;
    substitution.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        substitution.push_back(LaurentPoly::from_poly(Polynomial::variable(ctx, i)));
    substitution.push_back(std::move(lam_value));

    std::vector<LaurentPoly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        images.push_back(evaluate(flow.image(i), std::span<const LaurentPoly>(substitution),
                                  LaurentPoly::one(ctx)));
    return ActionImages(ctx, std::move(images));
}

ActionComparison compare_actions(const ActionImages& a, const ActionImages& b) {
    require_same_context(a.context(), b.context());
    for (std::size_t i = 0; i < a.context().size(); ++i) {
        if (a.image(i) != b.image(i))
            return {false, i, a.image(i) - b.image(i)};
    }
    return {true, std::nullopt, LaurentPoly::zero(a.context())};
}

Derivation infinitesimal_generator(const ActionImages& a) {
    const VarContext& ctx = a.context();
    std::vector<Polynomial> images;
    images.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i)
        images.push_back(a.image(i).formal_derivative().eval_at_one());
    return Derivation(ctx, std::move(images));
}

GroupLawCheck check_group_law(const Derivation& d, const Polynomial& s, std::int64_t N,
                              unsigned bound) {
    const ActionImages action = flow_action(d, s, N, bound);
    const VarContext& ctx = d.context();
    const std::size_t n = ctx.size();

    // Images of the generators under "act by t, then act by u in the
    // coefficients": substitute the u-action into each x-coefficient of the
    // t-action.
    std::vector<BiLaurent> act_u;
    act_u.reserve(n);
    for (std::size_t i = 0; i < n; ++i) act_u.push_back(BiLaurent::from_laurent(action.image(i), 1));

    for (std::size_t i = 0; i < n; ++i) {
        BiLaurent twice = BiLaurent::zero(ctx);
        for (const auto& [texp, coeff] : action.image(i).coefficients()) {
            const BiLaurent moved =
                evaluate(coeff, std::span<const BiLaurent>(act_u), BiLaurent::one(ctx));
            twice += moved * BiLaurent::term(Polynomial::one(ctx), texp, 0);
        }

        // Acting by the product t*u: every t-exponent k becomes t^k u^k.
        BiLaurent product = BiLaurent::zero(ctx);
        for (const auto& [texp, coeff] : action.image(i).coefficients())
            product += BiLaurent::term(coeff, texp, texp);

        if (twice != product)
            return {false, i,
                    "composite and product actions differ on generator '" + ctx.name(i) + "'"};
    }
    return {true, std::nullopt, ""};
}

EigenTable eigenvalue_table(const Derivation& d, const Polynomial& s, std::int64_t N,
                            std::span<const Polynomial> kernel_elements, unsigned m_max) {
    const Derivation generator = semisimple_generator(d, s, N);
    EigenTable table{true, {}};
    for (std::size_t idx = 0; idx < kernel_elements.size(); ++idx) {
        const auto& a = kernel_elements[idx];
        require_same_context(d.context(), a.context());
        const Polynomial da = d.apply(a);
        if (!da.is_zero())
            throw KernelMembershipError(idx, "claimed kernel element " + std::to_string(idx) +
                                                 " is not annihilated: D(" + format_polynomial(a) +
                                                 ") = " + format_polynomial(da));
        Polynomial spow = Polynomial::one(d.context());
        for (unsigned m = 0; m <= m_max; ++m) {
            const Polynomial elem = a * spow;
            const Rational expected = Rational(static_cast<long>(N)) * Rational(m);
            const bool ok = generator.apply(elem) == elem * expected;
            table.rows.push_back({idx, m, expected, ok});
            table.all_ok = table.all_ok && ok;
            spow = spow * s;
        }
    }
    return table;
}

}  // namespace slicekit
