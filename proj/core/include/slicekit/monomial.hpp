#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "slicekit/error.hpp"

namespace slicekit {

// Exponent vector of a power product.  The length always equals the arity of
// the ambient context; the zero vector is the monomial 1.
class Monomial {
public:
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial unit(std::size_t arity) { return Monomial(arity); }

    static Monomial variable(std::size_t arity, std::size_t i, std::uint32_t power = 1) {
        if (i >= arity) throw IndexError("variable index out of range");
        Monomial m(arity);
        m.exps_[i] = power;
        return m;
    }

    std::size_t arity() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_.at(i); }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    bool is_unit() const {
        return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
    }

    Monomial times(const Monomial& other) const {
        Monomial out = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
        return out;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    // Precondition: this->divides(other).
    Monomial quotient_into(const Monomial& other) const {
        Monomial out(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] > other.exps_[i]) throw Error("monomial quotient is not a monomial");
            out.exps_[i] = other.exps_[i] - exps_[i];
        }
        return out;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial out(a.exps_.size());
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return out;
    }

    Monomial with_exponent(std::size_t i, std::uint32_t e) const {
        Monomial out = *this;
        out.exps_.at(i) = e;
        return out;
    }

    // Widen to a larger arity, padding new trailing variables with exponent 0.
    Monomial widened(std::size_t arity) const {
        Monomial out = *this;
        out.exps_.resize(arity, 0);
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<std::uint32_t> exps_;
};

// Graded lexicographic order on exponent vectors: first by total degree,
// ties broken lexicographically with the leftmost variable most significant.
// This is the canonical term order used for storage and printing.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = a.total_degree();
        const auto db = b.total_degree();
        if (da != db) return da < db;
        return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                            b.exponents().begin(), b.exponents().end());
    }
};

}  // namespace slicekit
