#include "slicekit/endomorphism.hpp"

#include <algorithm>

#include "slicekit/parse.hpp"

namespace slicekit {

Endomorphism::Endomorphism(VarContext ctx, std::vector<Polynomial> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
    if (images_.size() != ctx_.size())
        throw ContextMismatchError("endomorphism needs one image per ring variable");
    for (const auto& im : images_) require_same_context(ctx_, im.context());
}

Endomorphism Endomorphism::identity(const VarContext& ctx) {
    std::vector<Polynomial> images;
    images.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) images.push_back(Polynomial::variable(ctx, i));
    return Endomorphism(ctx, std::move(images));
}

const Polynomial& Endomorphism::image(std::size_t i) const {
    if (i >= images_.size()) throw IndexError("generator index out of range");
    return images_[i];
}

Polynomial Endomorphism::apply(const Polynomial& p) const {
    require_same_context(ctx_, p.context());
    return evaluate(p, std::span<const Polynomial>(images_), Polynomial::one(ctx_));
}

bool Endomorphism::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != Polynomial::variable(ctx_, i)) return false;
    return true;
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
    require_same_context(f.context(), g.context());
    std::vector<Polynomial> images;
    images.reserve(g.images().size());
    for (const auto& im : g.images()) images.push_back(f.apply(im));
    return Endomorphism(f.context(), std::move(images));
}

AutomorphismPair AutomorphismPair::identity(const VarContext& ctx) {
    return AutomorphismPair(Endomorphism::identity(ctx), Endomorphism::identity(ctx));
}

AutomorphismPair verify_automorphism(const Endomorphism& f, const Endomorphism& g) {
    require_same_context(f.context(), g.context());
    const VarContext& ctx = f.context();
    const Endomorphism gf = compose(g, f);
    const Endomorphism fg = compose(f, g);
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        const Polynomial x = Polynomial::variable(ctx, i);
        if (gf.image(i) != x)
            throw NotInverseError(i, "inverse check failed on generator '" + ctx.name(i) +
                                         "': (g . f)(" + ctx.name(i) + ") = " +
                                         format_polynomial(gf.image(i)));
        if (fg.image(i) != x)
            throw NotInverseError(i, "inverse check failed on generator '" + ctx.name(i) +
                                         "': (f . g)(" + ctx.name(i) + ") = " +
                                         format_polynomial(fg.image(i)));
    }
    return AutomorphismPair(f, g);
}

AutomorphismPair invert_triangular(const Endomorphism& f) {
    const VarContext& ctx = f.context();
    const std::size_t n = ctx.size();

    // Split each image into c_i * x_i + h_i and record which variables h_i
    // mentions.
    std::vector<Rational> scale(n, Rational(0));
    std::vector<Polynomial> offset;
    std::vector<std::vector<std::size_t>> needs(n);
    offset.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Monomial xi = Monomial::variable(n, i);
        const Rational c = f.image(i).coefficient(xi);
        if (c == 0)
            throw NotTriangularError(i, "image of '" + ctx.name(i) +
                                            "' has no linear term in that variable");
        const Polynomial h = f.image(i) - Polynomial::variable(ctx, i) * c;
        if (h.depends_on(i))
            throw NotTriangularError(i, "image of '" + ctx.name(i) +
                                            "' is not affine in that variable");
        scale[i] = c;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && h.depends_on(j)) needs[i].push_back(j);
        offset.push_back(h);
    }

    // Topological order of the dependency relation; a cycle means no
    // back-substitution order exists.
    std::vector<int> state(n, 0);  // 0 unseen, 1 in progress, 2 done
    std::vector<std::size_t> order;
    order.reserve(n);
    auto visit = [&](auto&& self, std::size_t i) -> void {
        if (state[i] == 2) return;
        if (state[i] == 1)
            throw NotTriangularError(i, "generator images depend on each other cyclically near '" +
                                            ctx.name(i) + "'");
        state[i] = 1;
        for (auto j : needs[i]) self(self, j);
        state[i] = 2;
        order.push_back(i);
    };
    for (std::size_t i = 0; i < n; ++i) visit(visit, i);

    // g(x_i) = (x_i - h_i(g(x_j))) / c_i, filled in dependency order.
    std::vector<Polynomial> inverse_images(n, Polynomial::zero(ctx));
    for (auto i : order) {
        const Polynomial substituted =
            evaluate(offset[i], std::span<const Polynomial>(inverse_images), Polynomial::one(ctx));
        inverse_images[i] = (Polynomial::variable(ctx, i) - substituted) * (1 / scale[i]);
    }

    return verify_automorphism(f, Endomorphism(ctx, std::move(inverse_images)));
}

AutomorphismPair compose(const AutomorphismPair& f, const AutomorphismPair& g) {
    return verify_automorphism(compose(f.forward(), g.forward()),
                               compose(g.inverse(), f.inverse()));
}

Derivation conjugate(const AutomorphismPair& phi, const Derivation& d) {
    require_same_context(phi.context(), d.context());
    const VarContext& ctx = d.context();
    std::vector<Polynomial> images;
    images.reserve(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i)
        images.push_back(phi.forward().apply(d.apply(phi.inverse().image(i))));
    return Derivation(ctx, std::move(images));
}

}  // namespace slicekit
