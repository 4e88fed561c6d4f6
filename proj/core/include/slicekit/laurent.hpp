#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "slicekit/polynomial.hpp"

namespace slicekit {

// Polynomial in t and 1/t with coefficients in Q[x_1..x_n]: the value ring
// for one-parameter torus coactions.  Invariant: no stored coefficient is the
// zero polynomial.
class LaurentPoly {
public:
    using CoeffMap = std::map<std::int64_t, Polynomial>;

    static LaurentPoly zero(const VarContext& ctx) { return LaurentPoly(ctx); }

    static LaurentPoly one(const VarContext& ctx) { return term(Polynomial::one(ctx), 0); }

    // coeff * t^texp
    static LaurentPoly term(const Polynomial& coeff, std::int64_t texp) {
        LaurentPoly out(coeff.context());
        if (!coeff.is_zero()) out.coeffs_.emplace(texp, coeff);
        return out;
    }

    static LaurentPoly from_poly(const Polynomial& p) { return term(p, 0); }

    const VarContext& context() const { return ctx_; }
    const CoeffMap& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Polynomial coefficient(std::int64_t texp) const {
        auto it = coeffs_.find(texp);
        return it == coeffs_.end() ? Polynomial::zero(ctx_) : it->second;
    }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const Rational& c);
    friend LaurentPoly operator*(const LaurentPoly& a, const Polynomial& p);

    // Specialize t := 1 (sum of all coefficients).
    Polynomial eval_at_one() const;

    // d/dt: c * t^m  ->  m * c * t^(m-1).
    LaurentPoly formal_derivative() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    explicit LaurentPoly(VarContext ctx) : ctx_(std::move(ctx)) {}

    void prune();

    VarContext ctx_;
    CoeffMap coeffs_;
};

// Laurent polynomial in two independent parameters t, u over Q[x_1..x_n];
// just enough ring structure to state the compatibility law of an action
// applied twice.
class BiLaurent {
public:
    using Key = std::array<std::int64_t, 2>;
    using CoeffMap = std::map<Key, Polynomial>;

    static BiLaurent zero(const VarContext& ctx) { return BiLaurent(ctx); }

    static BiLaurent one(const VarContext& ctx) { return term(Polynomial::one(ctx), 0, 0); }

    static BiLaurent term(const Polynomial& coeff, std::int64_t texp, std::int64_t uexp) {
        BiLaurent out(coeff.context());
        if (!coeff.is_zero()) out.coeffs_.emplace(Key{texp, uexp}, coeff);
        return out;
    }

    // Reinterpret a one-parameter element in the first (t) or second (u) slot.
    static BiLaurent from_laurent(const LaurentPoly& a, std::size_t slot);

    const VarContext& context() const { return ctx_; }
    const CoeffMap& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    BiLaurent& operator+=(const BiLaurent& other);
    friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
    friend BiLaurent operator-(const BiLaurent& a, const BiLaurent& b);
    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
    friend BiLaurent operator*(const BiLaurent& a, const Rational& c);

    friend bool operator==(const BiLaurent& a, const BiLaurent& b) {
        return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BiLaurent& a, const BiLaurent& b) { return !(a == b); }

private:
    explicit BiLaurent(VarContext ctx) : ctx_(std::move(ctx)) {}

    void prune();

    VarContext ctx_;
    CoeffMap coeffs_;
};

}  // namespace slicekit
