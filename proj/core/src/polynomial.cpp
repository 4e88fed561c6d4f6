#include "slicekit/polynomial.hpp"

#include <algorithm>

namespace slicekit {

Polynomial Polynomial::from_terms(const VarContext& ctx,
                                  const std::vector<std::pair<Monomial, Rational>>& terms) {
    Polynomial p(ctx);
    for (const auto& [m, c] : terms) {
        if (m.arity() != ctx.size()) throw ContextMismatchError("monomial arity does not match ring");
        p.terms_[m] += c;
    }
    p.prune();
    return p;
}

void Polynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

std::uint32_t Polynomial::degree_in(std::size_t i) const {
    if (i >= ctx_.size()) throw IndexError("variable index out of range");
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(i));
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ctx_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_context(ctx_, other.ctx_);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_context(ctx_, other.ctx_);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    Polynomial out(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.terms_[ma.times(mb)] += ca * cb;
    out.prune();
    return out;
}

Polynomial operator*(const Polynomial& p, const Rational& c) {
    Polynomial out(p.ctx_);
    if (c == 0) return out;
    for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, pc * c);
    return out;
}

Polynomial Polynomial::powered(std::uint32_t k) const {
    return ring_power(*this, k, Polynomial::one(ctx_));
}

Polynomial Polynomial::partial_derivative(std::size_t i) const {
    if (i >= ctx_.size()) throw IndexError("variable index out of range");
    Polynomial out(ctx_);
    for (const auto& [m, c] : terms_) {
        const auto e = m.exponent(i);
        if (e == 0) continue;
        out.terms_.emplace(m.with_exponent(i, e - 1), c * Rational(e));
    }
    return out;
}

Polynomial Polynomial::substituted(std::span<const Polynomial> images) const {
    if (images.empty()) throw ContextMismatchError("substitution needs at least one image");
    const VarContext& target = images[0].context();
    for (const auto& im : images) require_same_context(target, im.context());
    return evaluate(*this, images, Polynomial::one(target));
}

Polynomial Polynomial::embedded(const VarContext& bigger) const {
    if (!bigger.has_prefix(ctx_))
        throw ContextMismatchError("target ring does not extend this ring");
    Polynomial out(bigger);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.widened(bigger.size()), c);
    return out;
}

namespace {

void collect_monomials(std::size_t arity, std::uint32_t budget, std::size_t pos,
                       std::vector<std::uint32_t>& current, std::vector<Monomial>& out) {
    if (pos == arity) {
        out.emplace_back(current);
        return;
    }
    for (std::uint32_t e = 0; e <= budget; ++e) {
        current[pos] = e;
        collect_monomials(arity, budget - e, pos + 1, current, out);
    }
    current[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to_degree(std::size_t arity, std::uint32_t d) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> current(arity, 0);
    collect_monomials(arity, d, 0, current, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

}  // namespace slicekit
