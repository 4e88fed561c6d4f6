#pragma once

#include <optional>
#include <string>

#include "slicekit/derivation.hpp"
#include "slicekit/matrix.hpp"

namespace slicekit {

inline constexpr unsigned kDefaultKernelDegree = 8;

// Basis of the finite-dimensional space { p : deg p <= degree, D(p) = 0 },
// obtained as the exact nullspace of the coefficient matrix of D on the
// monomial basis.  Elements are ordered by ascending graded-lex leading
// monomial; the constant 1 always comes first.
struct KernelBasis {
    std::vector<Polynomial> elements;
    unsigned degree;
    std::size_t matrix_rows;
    std::size_t matrix_cols;
};

KernelBasis kernel_basis(const Derivation& d, unsigned degree = kDefaultKernelDegree);

// Common kernel of a family of derivations, degree-bounded as above.
// Throws EmptyFamilyError for an empty family.
KernelBasis kernel_intersection(std::span<const Derivation> family,
                                unsigned degree = kDefaultKernelDegree);

// Search for a nonconstant polynomial annihilated by every derivation in the
// family, up to the degree bound.  The caveat spells out what a negative
// answer does and does not mean.
struct MlObstruction {
    std::optional<Polynomial> witness;   // lowest-order nonconstant common invariant, if any
    unsigned degree;
    KernelBasis intersection;
    std::string caveat;
};

MlObstruction ml_obstruction_report(std::span<const Derivation> family,
                                    unsigned degree = kDefaultKernelDegree);

// The fixed honesty note attached to every obstruction report.
std::string ml_degree_caveat(unsigned degree);

}  // namespace slicekit
