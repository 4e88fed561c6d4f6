#pragma once

#include <optional>
#include <span>
#include <vector>

#include "slicekit/polynomial.hpp"

namespace slicekit {

// A Q-linear derivation of Q[x_1..x_n], determined by its generator images.
// apply() extends by the Leibniz rule.
class Derivation {
public:
    Derivation(VarContext ctx, std::vector<Polynomial> images);

    static Derivation zero(const VarContext& ctx);

    // d/dx_i
    static Derivation coordinate(const VarContext& ctx, std::size_t i);

    // sum_i lambda_i * x_i * d/dx_i
    static Derivation diagonal(const VarContext& ctx, std::span<const Rational> eigenvalues);

    const VarContext& context() const { return ctx_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const Polynomial& image(std::size_t i) const;

    Polynomial apply(const Polynomial& p) const;

    // j-fold application.
    Polynomial iterate(const Polynomial& p, unsigned j) const;

    // The derivation g * D.
    Derivation scaled(const Polynomial& g) const;

    bool is_zero() const;

    friend bool operator==(const Derivation& a, const Derivation& b) {
        return a.ctx_ == b.ctx_ && a.images_ == b.images_;
    }
    friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

private:
    VarContext ctx_;
    std::vector<Polynomial> images_;
};

// Outcome of probing local nilpotency: either every generator died within
// the bound (with the minimal vanishing iterate recorded per generator), or
// the bound was exhausted and the question stays open.
struct NilpotencyProbe {
    bool confirmed;
    unsigned bound;
    std::vector<unsigned> vanishing_degree;   // meaningful when confirmed; D^deg(x_i) = 0
    std::optional<std::size_t> survivor;      // a generator still alive at the bound
};

NilpotencyProbe probe_nilpotency(const Derivation& d, unsigned bound = 64);

// D is "nice" when D^2 kills every generator.  On failure the witness is the
// first generator with D^2(x_i) != 0, together with that second iterate.
struct NicenessCheck {
    bool nice;
    std::optional<std::size_t> witness;
    Polynomial second_iterate;
};

NicenessCheck check_nice(const Derivation& d);

// Does D(s) = 1 hold exactly?  residual = D(s) - 1.
struct SliceCheck {
    bool ok;
    Polynomial residual;
};

SliceCheck check_slice(const Derivation& d, const Polynomial& s);

// For each element, decide whether it is an eigenvector of the derivation and
// if so report its exact rational eigenvalue.  The zero polynomial counts as
// an eigenvector of eigenvalue 0.
struct EigenEntry {
    Polynomial element;
    bool is_eigenvector;
    Rational eigenvalue;
};

std::vector<EigenEntry> eigen_report(const Derivation& d, std::span<const Polynomial> elements);

}  // namespace slicekit
