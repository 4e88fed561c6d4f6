#pragma once

#include <vector>

#include "slicekit/derivation.hpp"
#include "slicekit/polynomial.hpp"

namespace slicekit {

// Ring endomorphism of Q[x_1..x_n], determined by generator images and
// extended multiplicatively via substitution.
class Endomorphism {
public:
    Endomorphism(VarContext ctx, std::vector<Polynomial> images);

    static Endomorphism identity(const VarContext& ctx);

    const VarContext& context() const { return ctx_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const Polynomial& image(std::size_t i) const;

    Polynomial apply(const Polynomial& p) const;

    bool is_identity() const;

    friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
        return a.ctx_ == b.ctx_ && a.images_ == b.images_;
    }
    friend bool operator!=(const Endomorphism& a, const Endomorphism& b) { return !(a == b); }

private:
    VarContext ctx_;
    std::vector<Polynomial> images_;
};

// (f . g)(x_i) = f(g(x_i)): apply g first, then f.
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

// An automorphism travels with its verified inverse; the only constructors
// are verify_automorphism and invert_triangular, so holding one of these is
// proof that both composites were checked to be the identity.
class AutomorphismPair {
public:
    static AutomorphismPair identity(const VarContext& ctx);

    const VarContext& context() const { return forward_.context(); }
    const Endomorphism& forward() const { return forward_; }
    const Endomorphism& inverse() const { return inverse_; }

    AutomorphismPair inverted() const { return AutomorphismPair(inverse_, forward_); }

private:
    AutomorphismPair(Endomorphism forward, Endomorphism inverse)
        : forward_(std::move(forward)), inverse_(std::move(inverse)) {}

    friend AutomorphismPair verify_automorphism(const Endomorphism& f, const Endomorphism& g);
    friend AutomorphismPair invert_triangular(const Endomorphism& f);
    friend AutomorphismPair compose(const AutomorphismPair& f, const AutomorphismPair& g);

    Endomorphism forward_;
    Endomorphism inverse_;
};

// Check g . f = id and f . g = id generator by generator; throws
// NotInverseError naming the first generator whose image differs.
AutomorphismPair verify_automorphism(const Endomorphism& f, const Endomorphism& g);

// Invert an endomorphism whose images have the shape
//   f(x_i) = c_i * x_i + h_i,   c_i != 0,  h_i free of x_i,
// provided the dependency relation "h_i mentions x_j" is acyclic.  This
// covers upper and lower triangular systems in any variable order.  The
// inverse is found by back-substitution along a topological order and the
// resulting pair is verified before being returned.
AutomorphismPair invert_triangular(const Endomorphism& f);

AutomorphismPair compose(const AutomorphismPair& f, const AutomorphismPair& g);

// The derivation phi . D . phi^{-1}.
Derivation conjugate(const AutomorphismPair& phi, const Derivation& d);

}  // namespace slicekit
