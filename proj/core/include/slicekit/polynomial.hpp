#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "slicekit/context.hpp"
#include "slicekit/monomial.hpp"
#include "slicekit/rational.hpp"

namespace slicekit {

// Sparse multivariate polynomial with exact rational coefficients.  Terms are
// kept in a map ordered by graded lex, so iteration, printing and equality
// are all canonical.  Invariant: no stored coefficient is zero.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    static Polynomial zero(const VarContext& ctx) { return Polynomial(ctx); }

    static Polynomial constant(const VarContext& ctx, const Rational& c) {
        Polynomial p(ctx);
        if (c != 0) p.terms_.emplace(Monomial::unit(ctx.size()), c);
        return p;
    }

    static Polynomial one(const VarContext& ctx) { return constant(ctx, 1); }

    static Polynomial variable(const VarContext& ctx, std::size_t i) {
        Polynomial p(ctx);
        p.terms_.emplace(Monomial::variable(ctx.size(), i), Rational(1));
        return p;
    }

    static Polynomial from_monomial(const VarContext& ctx, const Monomial& m, const Rational& c) {
        if (m.arity() != ctx.size()) throw ContextMismatchError("monomial arity does not match ring");
        Polynomial p(ctx);
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    static Polynomial from_terms(const VarContext& ctx,
                                 const std::vector<std::pair<Monomial, Rational>>& terms);

    const VarContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }

    // Coefficient of the given power product (zero if absent).
    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Monomial::unit(ctx_.size())); }

    // Total degree; nullopt is the sentinel for the zero polynomial.
    std::optional<std::uint64_t> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first.total_degree();
    }

    // Largest exponent of variable i across all terms (0 for the zero polynomial).
    std::uint32_t degree_in(std::size_t i) const;

    bool depends_on(std::size_t i) const { return degree_in(i) > 0; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& p, const Rational& c);
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

    Polynomial powered(std::uint32_t k) const;

    Polynomial partial_derivative(std::size_t i) const;

    // Simultaneous substitution x_i := images[i].  The images fix the target
    // ring; their shared context need not be this polynomial's context.
    Polynomial substituted(std::span<const Polynomial> images) const;

    // Reinterpret in a larger ring whose leading variables are exactly this
    // ring's variables.
    Polynomial embedded(const VarContext& bigger) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    explicit Polynomial(VarContext ctx) : ctx_(std::move(ctx)) {}

    void prune();

    VarContext ctx_;
    TermMap terms_;
};

// Evaluate p term by term with x_i := images[i] in an arbitrary commutative
// ring R admitting +, *, and scaling by Rational.  `one` fixes the target
// ring.  Powers use binary exponentiation.
template <class R>
R ring_power(R base, std::uint32_t e, const R& one) {
    R acc = one;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

template <class R>
R evaluate(const Polynomial& p, std::span<const R> images, const R& one) {
    if (images.size() != p.context().size())
        throw ContextMismatchError("substitution image count does not match ring arity");
    R acc = one * Rational(0);
    for (const auto& [mono, coeff] : p.terms()) {
        R term = one;
        for (std::size_t i = 0; i < images.size(); ++i) {
            const auto e = mono.exponent(i);
            if (e > 0) term = term * ring_power(images[i], e, one);
        }
        acc = acc + term * coeff;
    }
    return acc;
}

// All monomials of total degree <= d in ascending graded-lex order (so the
// unit monomial comes first).
std::vector<Monomial> monomials_up_to_degree(std::size_t arity, std::uint32_t d);

}  // namespace slicekit
