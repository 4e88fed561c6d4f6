#include "slicekit/kernel.hpp"

#include <map>

#include "slicekit/parse.hpp"

namespace slicekit {

namespace {

KernelBasis nullspace_kernel(std::span<const Derivation> family, unsigned degree) {
    const VarContext& ctx = family.front().context();
    for (const auto& d : family) require_same_context(ctx, d.context());

    const std::vector<Monomial> columns = monomials_up_to_degree(ctx.size(), degree);

    // One block of rows per derivation; rows are indexed by the monomials
    // appearing in any image D(m_j).
    std::vector<std::vector<Polynomial>> images;
    images.reserve(family.size());
    std::map<std::pair<std::size_t, Monomial>, std::size_t,
             decltype([](const auto& a, const auto& b) {
                 if (a.first != b.first) return a.first < b.first;
                 return GrlexLess{}(a.second, b.second);
             })>
        row_of;
    for (std::size_t k = 0; k < family.size(); ++k) {
        std::vector<Polynomial> block;
        block.reserve(columns.size());
        for (const auto& m : columns) {
            Polynomial image = family[k].apply(Polynomial::from_monomial(ctx, m, Rational(1)));
            for (const auto& [mono, coeff] : image.terms())
                row_of.try_emplace({k, mono}, row_of.size());
            block.push_back(std::move(image));
        }
        images.push_back(std::move(block));
    }

    RationalMatrix matrix(row_of.empty() ? 1 : row_of.size(), columns.size());
    for (std::size_t k = 0; k < family.size(); ++k)
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (const auto& [mono, coeff] : images[k][j].terms())
                matrix.at(row_of.at({k, mono}), j) = coeff;

    KernelBasis basis{{}, degree, matrix.rows(), matrix.cols()};
    for (const auto& v : nullspace_basis(matrix)) {
        Polynomial element = Polynomial::zero(ctx);
        for (std::size_t j = 0; j < columns.size(); ++j)
            element += Polynomial::from_monomial(ctx, columns[j], v[j]);
        for (const auto& d : family)
            if (!d.apply(element).is_zero())
                throw InternalError("kernel basis element " + format_polynomial(element) +
                                    " is not annihilated");
        basis.elements.push_back(std::move(element));
    }
    return basis;
}

}  // namespace

KernelBasis kernel_basis(const Derivation& d, unsigned degree) {
    const Derivation family[] = {d};
    return nullspace_kernel(family, degree);
}

KernelBasis kernel_intersection(std::span<const Derivation> family, unsigned degree) {
    if (family.empty())
        throw EmptyFamilyError("kernel intersection over an empty family of derivations");
    return nullspace_kernel(family, degree);
}

std::string ml_degree_caveat(unsigned degree) {
    return "degree-bounded search: finding no nonconstant common invariant of degree <= " +
           std::to_string(degree) +
           " does not rule one out in higher degree; a witness, when found, is conclusive";
}

MlObstruction ml_obstruction_report(std::span<const Derivation> family, unsigned degree) {
    if (family.empty())
        throw EmptyFamilyError("obstruction report over an empty family of derivations");
    KernelBasis intersection = nullspace_kernel(family, degree);

    std::optional<Polynomial> witness;
    for (const auto& e : intersection.elements) {
        if (e.is_constant()) continue;
        witness = e;
        break;
    }
    return {std::move(witness), degree, std::move(intersection), ml_degree_caveat(degree)};
}

}  // namespace slicekit
