#include "slicekit/derivation.hpp"

namespace slicekit {

Derivation::Derivation(VarContext ctx, std::vector<Polynomial> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
    if (images_.size() != ctx_.size())
        throw ContextMismatchError("derivation needs one image per ring variable");
    for (const auto& im : images_) require_same_context(ctx_, im.context());
}

Derivation Derivation::zero(const VarContext& ctx) {
    return Derivation(ctx, std::vector<Polynomial>(ctx.size(), Polynomial::zero(ctx)));
}

Derivation Derivation::coordinate(const VarContext& ctx, std::size_t i) {
    if (i >= ctx.size()) throw IndexError("variable index out of range");
    std::vector<Polynomial> images(ctx.size(), Polynomial::zero(ctx));
    images[i] = Polynomial::one(ctx);
    return Derivation(ctx, std::move(images));
}

Derivation Derivation::diagonal(const VarContext& ctx, std::span<const Rational> eigenvalues) {
    if (eigenvalues.size() != ctx.size())
        throw ContextMismatchError("diagonal derivation needs one eigenvalue per variable");
    std::vector<Polynomial> images;
    images.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i)
        images.push_back(Polynomial::variable(ctx, i) * eigenvalues[i]);
    return Derivation(ctx, std::move(images));
}

const Polynomial& Derivation::image(std::size_t i) const {
    if (i >= images_.size()) throw IndexError("generator index out of range");
    return images_[i];
}

Polynomial Derivation::apply(const Polynomial& p) const {
    require_same_context(ctx_, p.context());
    Polynomial acc = Polynomial::zero(ctx_);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].is_zero()) continue;
        acc += images_[i] * p.partial_derivative(i);
    }
    return acc;
}

Polynomial Derivation::iterate(const Polynomial& p, unsigned j) const {
    Polynomial acc = p;
    for (unsigned k = 0; k < j; ++k) {
        if (acc.is_zero()) break;
        acc = apply(acc);
    }
    return acc;
}

Derivation Derivation::scaled(const Polynomial& g) const {
    require_same_context(ctx_, g.context());
    std::vector<Polynomial> images;
    images.reserve(images_.size());
    for (const auto& im : images_) images.push_back(g * im);
    return Derivation(ctx_, std::move(images));
}

bool Derivation::is_zero() const {
    for (const auto& im : images_)
        if (!im.is_zero()) return false;
    return true;
}

NilpotencyProbe probe_nilpotency(const Derivation& d, unsigned bound) {
    NilpotencyProbe probe{true, bound, {}, std::nullopt};
    probe.vanishing_degree.reserve(d.context().size());
    for (std::size_t i = 0; i < d.context().size(); ++i) {
        Polynomial cur = Polynomial::variable(d.context(), i);
        unsigned j = 0;
        while (j < bound && !cur.is_zero()) {
            cur = d.apply(cur);
            ++j;
        }
        if (!cur.is_zero()) {
            probe.confirmed = false;
            probe.survivor = i;
            probe.vanishing_degree.clear();
            return probe;
        }
        probe.vanishing_degree.push_back(j);
    }
    return probe;
}

NicenessCheck check_nice(const Derivation& d) {
    for (std::size_t i = 0; i < d.context().size(); ++i) {
        const Polynomial second = d.apply(d.image(i));
        if (!second.is_zero()) return {false, i, second};
    }
    return {true, std::nullopt, Polynomial::zero(d.context())};
}

SliceCheck check_slice(const Derivation& d, const Polynomial& s) {
    require_same_context(d.context(), s.context());
    const Polynomial residual = d.apply(s) - Polynomial::one(d.context());
    return {residual.is_zero(), residual};
}

std::vector<EigenEntry> eigen_report(const Derivation& d, std::span<const Polynomial> elements) {
    std::vector<EigenEntry> out;
    out.reserve(elements.size());
    for (const auto& e : elements) {
        require_same_context(d.context(), e.context());
        if (e.is_zero()) {
            out.push_back({e, true, Rational(0)});
            continue;
        }
        const Polynomial image = d.apply(e);
        if (image.is_zero()) {
            out.push_back({e, true, Rational(0)});
            continue;
        }
        // Candidate eigenvalue from the leading term, then exact comparison.
        const auto& [lead_mono, lead_coeff] = *e.terms().rbegin();
        const Rational candidate = image.coefficient(lead_mono) / lead_coeff;
        const bool match = image == e * candidate;
        out.push_back({e, match, match ? candidate : Rational(0)});
    }
    return out;
}

}  // namespace slicekit
