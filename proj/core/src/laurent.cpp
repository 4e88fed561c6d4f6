#include "slicekit/laurent.hpp"

namespace slicekit {

void LaurentPoly::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero())
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(ctx_);
    for (const auto& [m, p] : coeffs_) out.coeffs_.emplace(m, -p);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    require_same_context(ctx_, other.ctx_);
    for (const auto& [m, p] : other.coeffs_) {
        auto [it, inserted] = coeffs_.emplace(m, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    return *this += -other;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_context(a.ctx_, b.ctx_);
    LaurentPoly out(a.ctx_);
    for (const auto& [ma, pa] : a.coeffs_)
        for (const auto& [mb, pb] : b.coeffs_) {
            auto [it, inserted] = out.coeffs_.emplace(ma + mb, pa * pb);
            if (!inserted) it->second += pa * pb;
        }
    out.prune();
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const Rational& c) {
    LaurentPoly out(a.ctx_);
    if (c == 0) return out;
    for (const auto& [m, p] : a.coeffs_) out.coeffs_.emplace(m, p * c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const Polynomial& p) {
    require_same_context(a.ctx_, p.context());
    LaurentPoly out(a.ctx_);
    if (p.is_zero()) return out;
    for (const auto& [m, q] : a.coeffs_) out.coeffs_.emplace(m, q * p);
    out.prune();
    return out;
}

Polynomial LaurentPoly::eval_at_one() const {
    Polynomial acc = Polynomial::zero(ctx_);
    for (const auto& [m, p] : coeffs_) acc += p;
    return acc;
}

LaurentPoly LaurentPoly::formal_derivative() const {
    LaurentPoly out(ctx_);
    for (const auto& [m, p] : coeffs_) {
        if (m == 0) continue;
        out.coeffs_.emplace(m - 1, p * Rational(static_cast<long>(m)));
    }
    return out;
}

BiLaurent BiLaurent::from_laurent(const LaurentPoly& a, std::size_t slot) {
    if (slot > 1) throw IndexError("parameter slot must be 0 or 1");
    BiLaurent out(a.context());
    for (const auto& [m, p] : a.coefficients()) {
        Key key{0, 0};
        key[slot] = m;
        out.coeffs_.emplace(key, p);
    }
    return out;
}

void BiLaurent::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second.is_zero())
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& other) {
    require_same_context(ctx_, other.ctx_);
    for (const auto& [m, p] : other.coeffs_) {
        auto [it, inserted] = coeffs_.emplace(m, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

BiLaurent operator-(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent out = a;
    out += b * Rational(-1);
    return out;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    require_same_context(a.ctx_, b.ctx_);
    BiLaurent out(a.ctx_);
    for (const auto& [ma, pa] : a.coeffs_)
        for (const auto& [mb, pb] : b.coeffs_) {
            BiLaurent::Key key{ma[0] + mb[0], ma[1] + mb[1]};
            auto [it, inserted] = out.coeffs_.emplace(key, pa * pb);
            if (!inserted) it->second += pa * pb;
        }
    out.prune();
    return out;
}

BiLaurent operator*(const BiLaurent& a, const Rational& c) {
    BiLaurent out(a.ctx_);
    if (c == 0) return out;
    for (const auto& [m, p] : a.coeffs_) out.coeffs_.emplace(m, p * c);
    return out;
}

}  // namespace slicekit
