#include "slicekit/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "slicekit/matrix.hpp"
#include "slicekit/parse.hpp"

namespace slicekit {

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
    std::vector<bool> seen(priority_.size(), false);
    for (auto i : priority_) {
        if (i >= priority_.size() || seen[i])
            throw Error("variable priority must be a permutation of the ring variables");
        seen[i] = true;
    }
    if (priority_.empty()) throw Error("monomial order needs at least one variable");
}

MonomialOrder MonomialOrder::grlex(std::size_t arity) {
    std::vector<std::size_t> priority(arity);
    for (std::size_t i = 0; i < arity; ++i) priority[i] = i;
    return MonomialOrder(Kind::Grlex, std::move(priority));
}

MonomialOrder MonomialOrder::grlex(std::vector<std::size_t> priority) {
    return MonomialOrder(Kind::Grlex, std::move(priority));
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
    return MonomialOrder(Kind::Lex, std::move(priority));
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    if (a.arity() != priority_.size() || b.arity() != priority_.size())
        throw ContextMismatchError("monomial arity does not match the order");
    if (kind_ == Kind::Grlex) {
        const auto da = a.total_degree();
        const auto db = b.total_degree();
        if (da != db) return da < db;
    }
    for (auto i : priority_) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
    }
    return false;
}

std::pair<Monomial, Rational> leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw Error("the zero polynomial has no leading term");
    auto it = p.terms().begin();
    auto best = it;
    for (++it; it != p.terms().end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

namespace {

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    const auto [mono, coeff] = leading_term(p, order);
    return p * (1 / coeff);
}

// Fully reduce p against the given generators (assumed nonzero).
Polynomial reduce_against(const Polynomial& p, std::span<const Polynomial> gens,
                          const MonomialOrder& order) {
    const VarContext& ctx = p.context();
    Polynomial remainder = Polynomial::zero(ctx);
    Polynomial work = p;
    while (!work.is_zero()) {
        const auto [mono, coeff] = leading_term(work, order);
        bool reduced = false;
        for (const auto& g : gens) {
            const auto [gmono, gcoeff] = leading_term(g, order);
            if (!gmono.divides(mono)) continue;
            const Polynomial factor =
                Polynomial::from_monomial(ctx, gmono.quotient_into(mono), coeff / gcoeff);
            work -= factor * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            const Polynomial term = Polynomial::from_monomial(ctx, mono, coeff);
            remainder += term;
            work -= term;
        }
    }
    return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    const VarContext& ctx = f.context();
    const auto [fm, fc] = leading_term(f, order);
    const auto [gm, gc] = leading_term(g, order);
    const Monomial lcm = Monomial::lcm(fm, gm);
    const Polynomial left = Polynomial::from_monomial(ctx, fm.quotient_into(lcm), 1 / fc);
    const Polynomial right = Polynomial::from_monomial(ctx, gm.quotient_into(lcm), 1 / gc);
    return left * f - right * g;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order) {
    if (generators.empty()) throw EmptyFamilyError("ideal needs at least one generator");
    const VarContext& ctx = generators.front().context();
    for (const auto& g : generators) require_same_context(ctx, g.context());
    if (order.arity() != ctx.size())
        throw ContextMismatchError("order arity does not match the ring");

    std::vector<Polynomial> basis;
    for (const auto& g : generators)
        if (!g.is_zero()) basis.push_back(make_monic(g, order));

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        const auto [i, j] = pairs.front();
        pairs.pop_front();
        const Polynomial s = s_polynomial(basis[i], basis[j], order);
        const Polynomial reduced = reduce_against(s, basis, order);
        if (reduced.is_zero()) continue;
        basis.push_back(make_monic(reduced, order));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // Auto-reduce to the unique reduced basis: drop generators whose leading
    // monomial is divisible by another's, then fully reduce each tail.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(basis.size() - 1);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (k != i) others.push_back(basis[k]);
            if (others.empty()) break;
            const Polynomial reduced = reduce_against(basis[i], others, order);
            if (reduced == basis[i]) continue;
            changed = true;
            if (reduced.is_zero()) {
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
            } else {
                basis[i] = make_monic(reduced, order);
            }
        }
    }

    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(leading_term(a, order).first, leading_term(b, order).first);
    });

    // Post-hoc certificate: every S-pair of the finished basis reduces to 0.
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Polynomial s = s_polynomial(basis[i], basis[j], order);
            if (!reduce_against(s, basis, order).is_zero())
                throw InternalError("completed basis has an S-pair with nonzero remainder");
        }

    return GroebnerBasis(ctx, order, std::move(basis));
}

bool GroebnerBasis::is_unit_ideal() const {
    return gens_.size() == 1 && gens_.front() == Polynomial::one(ctx_);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
    require_same_context(p.context(), basis.context());
    if (basis.generators().empty()) return p;
    return reduce_against(p, basis.generators(), basis.order());
}

DescentCheck derivation_descends(const Derivation& d, const GroebnerBasis& basis) {
    require_same_context(d.context(), basis.context());
    for (std::size_t k = 0; k < basis.generators().size(); ++k) {
        const Polynomial residual = normal_form(d.apply(basis.generators()[k]), basis);
        if (!residual.is_zero()) return {false, k, residual};
    }
    return {true, std::nullopt, Polynomial::zero(d.context())};
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, unsigned degree) {
    std::vector<Monomial> out;
    for (const auto& m : monomials_up_to_degree(basis.context().size(), degree)) {
        bool divisible = false;
        for (const auto& g : basis.generators()) {
            if (leading_term(g, basis.order()).first.divides(m)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) out.push_back(m);
    }
    return out;
}

std::vector<Polynomial> quotient_kernel_basis(const Derivation& d, const GroebnerBasis& basis,
                                              unsigned degree) {
    require_same_context(d.context(), basis.context());
    const auto descent = derivation_descends(d, basis);
    if (!descent.ok)
        throw Error("derivation does not descend to the quotient: generator " +
                    std::to_string(descent.witness.value()) + " maps to residue " +
                    format_polynomial(descent.residual));

    const VarContext& ctx = d.context();
    const std::vector<Monomial> columns = standard_monomials(basis, degree);

    std::vector<Polynomial> images;
    images.reserve(columns.size());
    std::map<Monomial, std::size_t, GrlexLess> row_of;
    for (const auto& m : columns) {
        Polynomial image = normal_form(d.apply(Polynomial::from_monomial(ctx, m, Rational(1))), basis);
        for (const auto& [mono, coeff] : image.terms()) row_of.try_emplace(mono, row_of.size());
        images.push_back(std::move(image));
    }

    RationalMatrix matrix(row_of.empty() ? 1 : row_of.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [mono, coeff] : images[j].terms())
            matrix.at(row_of.at(mono), j) = coeff;

    std::vector<Polynomial> out;
    for (const auto& v : nullspace_basis(matrix)) {
        Polynomial element = Polynomial::zero(ctx);
        for (std::size_t j = 0; j < columns.size(); ++j)
            element += Polynomial::from_monomial(ctx, columns[j], v[j]);
        if (!normal_form(d.apply(element), basis).is_zero())
            throw InternalError("quotient kernel element fails its defining identity");
        out.push_back(std::move(element));
    }
    return out;
}

}  // namespace slicekit
