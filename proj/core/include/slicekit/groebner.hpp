#pragma once

#include <optional>
#include <span>
#include <vector>

#include "slicekit/derivation.hpp"
#include "slicekit/polynomial.hpp"

namespace slicekit {

// Term order for ideal computations: graded lex or pure lex, with an explicit
// variable priority (priority[0] is the most significant variable).  The
// storage order of Polynomial stays graded lex with natural priority; this
// order only steers leading-term selection.
class MonomialOrder {
public:
    enum class Kind { Grlex, Lex };

    static MonomialOrder grlex(std::size_t arity);
    static MonomialOrder grlex(std::vector<std::size_t> priority);
    static MonomialOrder lex(std::vector<std::size_t> priority);

    Kind kind() const { return kind_; }
    const std::vector<std::size_t>& priority() const { return priority_; }
    std::size_t arity() const { return priority_.size(); }

    bool less(const Monomial& a, const Monomial& b) const;

private:
    MonomialOrder(Kind kind, std::vector<std::size_t> priority);

    Kind kind_;
    std::vector<std::size_t> priority_;
};

// Leading (monomial, coefficient) of a nonzero polynomial under the order.
std::pair<Monomial, Rational> leading_term(const Polynomial& p, const MonomialOrder& order);

// A reduced Groebner basis: monic, pairwise auto-reduced generators sorted by
// ascending leading monomial.  Only buchberger() constructs these.
class GroebnerBasis {
public:
    const VarContext& context() const { return ctx_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }
    bool is_unit_ideal() const;

private:
    GroebnerBasis(VarContext ctx, MonomialOrder order, std::vector<Polynomial> gens)
        : ctx_(std::move(ctx)), order_(std::move(order)), gens_(std::move(gens)) {}

    friend GroebnerBasis buchberger(std::span<const Polynomial> generators,
                                    const MonomialOrder& order);

    VarContext ctx_;
    MonomialOrder order_;
    std::vector<Polynomial> gens_;
};

// Plain Buchberger completion (first-in pair selection, full reduction),
// followed by auto-reduction.  As a safety net every S-pair of the finished
// basis is re-reduced and must land on zero.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order);

// Fully reduced normal form: no term of the result is divisible by any
// leading monomial of the basis.  This is the canonical representative of p
// modulo the ideal, and is Q-linear in p.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

// Does D map the ideal into itself?  Checked on the basis generators; the
// witness is the first generator whose image has a nonzero normal form.
struct DescentCheck {
    bool ok;
    std::optional<std::size_t> witness;
    Polynomial residual;
};

DescentCheck derivation_descends(const Derivation& d, const GroebnerBasis& basis);

// Monomials of degree <= d outside the leading-term ideal: a basis of the
// degree-d slice of the quotient ring.
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, unsigned degree);

// Basis of { residue classes p of degree <= d : D(p) = 0 in the quotient },
// computed from the exact nullspace of the induced linear map on standard
// monomials.  Requires derivation_descends (Error otherwise).
std::vector<Polynomial> quotient_kernel_basis(const Derivation& d, const GroebnerBasis& basis,
                                              unsigned degree);

}  // namespace slicekit
