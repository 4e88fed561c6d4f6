#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slicekit/action.hpp"
#include "slicekit/endomorphism.hpp"

namespace slicekit {

// Both normalization conditions ask phi to conjugate D to d/dx_n (x_n = last
// variable).  The strict form also needs phi(s) = x_n exactly; the affine
// form allows phi(s) = x_n + p with p free of x_n.

struct CoordinateCheck {
    bool ok;                                // conjugate_ok && slice_ok
    bool conjugate_ok;                      // phi . D . phi^{-1} = d/dx_n
    std::optional<std::size_t> conjugate_witness;
    Polynomial conjugate_residual;
    bool slice_ok;                          // phi(s) = x_n
    Polynomial slice_residual;              // phi(s) - x_n
};

CoordinateCheck check_slice_coordinate(const Derivation& d, const Polynomial& s,
                                       const AutomorphismPair& phi);

struct AffineCheck {
    bool ok;
    bool conjugate_ok;
    std::optional<std::size_t> conjugate_witness;
    Polynomial conjugate_residual;
    bool offset_ok;                         // phi(s) - x_n is free of x_n
    Polynomial offset;                      // p, meaningful when offset_ok
};

AffineCheck check_slice_affine(const Derivation& d, const Polynomial& s,
                               const AutomorphismPair& phi);

enum class LinearizationRoute { SliceCoordinate, SliceAffine };

// psi = tau . phi together with the diagonal form it produces:
//   psi . (N s D) . psi^{-1} = N x_n d/dx_n    and    psi(s) = x_n,
// where tau subtracts the offset p from the last coordinate.  Both equalities
// are re-verified before the certificate is returned.
struct LinearizationCertificate {
    AutomorphismPair psi;
    Derivation diagonal;
    Polynomial offset;
    LinearizationRoute route;
};

// Throws ConditionError when the affine condition fails (no certificate along
// this route), InternalError if a guaranteed identity fails to verify.
LinearizationCertificate build_linearization(const Derivation& d, const Polynomial& s,
                                             std::int64_t N, const AutomorphismPair& phi);

// Outcome of normalizing a factorization E = N * sigma * delta of a diagonal
// derivation E with eigenvalues `lambda`: the unique variable x_i with
// lambda_i != 0 becomes the last coordinate and sigma is rescaled to exactly
// that coordinate.
struct DiagonalNormalForm {
    std::size_t pivot;                      // index with lambda_pivot = N
    Rational scaling;                       // c in sigma = c * x_pivot
    std::vector<std::size_t> permutation;   // new position j holds old variable permutation[j]
    AutomorphismPair normalizer;            // carries (E, sigma, delta) to the standard triple
};

struct FactorizationError {
    enum class Kind { HypothesesFail, TwoNonzeroEigenvalues, EigenvalueMismatch } kind;
    std::string detail;
};

struct FactorizationOutcome {
    std::optional<DiagonalNormalForm> form;
    std::optional<FactorizationError> error;
    bool ok() const { return form.has_value(); }
};

// Hypotheses (E = N*sigma*delta image by image, delta(sigma) = 1) are
// checked, not assumed.  Exactly one nonzero eigenvalue is required and it
// must equal N.
FactorizationOutcome normalize_diagonal_factorization(std::span<const Rational> eigenvalues,
                                                      const Polynomial& sigma,
                                                      const Derivation& delta, std::int64_t N);

// Conjugation by the flow at time a in ker D: the slice moves to s - a and
// the semisimple generator N*s*D moves to N*(s-a)*D.  Both identities are
// re-verified exactly.
struct SliceShift {
    AutomorphismPair flow;                  // forward = exp(-a*D)
    Polynomial shifted_slice;               // s - a
    Derivation conjugated;                  // N * (s - a) * D
    std::string note;                       // records the sign convention
};

SliceShift shift_slice(const Derivation& d, const Polynomial& s, const Polynomial& a,
                       std::int64_t N, unsigned bound = kDefaultNilpotencyBound);

// Sufficient-direction geometric criterion: (a) phi sends each listed kernel
// generator into the subring without the last variable, (b) phi(s) is the
// last variable plus an offset free of it, (c) phi conjugates D to d/dx_n.
struct KernelCriterionClause {
    bool ok;
    std::string witness;
};

struct KernelCriterionReport {
    KernelCriterionClause generators_descend;
    KernelCriterionClause slice_affine;
    KernelCriterionClause conjugate_coordinate;
    bool all_ok;
    std::string note;
};

KernelCriterionReport check_kernel_criterion(const Derivation& d, const Polynomial& s,
                                             const AutomorphismPair& phi,
                                             std::span<const Polynomial> kernel_generators);

// The rank-one family on Q[x,y,z]: D = f(x) d/dy + g(x) d/dz with
// gcd(f, g) = 1.  The Euclidean cofactors u, v with u*f + v*g = 1 give the
// slice s = u*y + v*z, and (x, g*y - f*z) generate ker D.  All of this is
// re-verified before returning.
struct WangData {
    Derivation derivation;
    Polynomial slice;
    std::array<Polynomial, 2> kernel_generators;
    Polynomial f, g, u, v;
};

// f, g must be univariate in the first variable of a three-variable ring
// (NotUnivariateError) with gcd(f, g) = 1 (GcdError).
WangData wang_normal_form(const Polynomial& f, const Polynomial& g);

}  // namespace slicekit
