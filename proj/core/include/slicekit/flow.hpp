#pragma once

#include <string>
#include <vector>

#include "slicekit/endomorphism.hpp"

namespace slicekit {

// Default iteration budget when confirming local nilpotency.
inline constexpr unsigned kDefaultNilpotencyBound = 64;

// Name of the formal flow parameter adjoined by formal_exponential.
inline constexpr const char* kFlowParameter = "lam";

// exp(f * D) as a ring endomorphism: x_i -> sum_j f^j D^j(x_i) / j!.
// Requires D locally nilpotent within `bound` (else NilpotencyError) and
// D(f) = 0 (else KernelMembershipError) so that the sum is finite and the
// result is an automorphism; the inverse is exp(-f * D).
Endomorphism exp_derivation(const Derivation& d, const Polynomial& f,
                            unsigned bound = kDefaultNilpotencyBound);

// exp(f * D) bundled with its verified inverse exp(-f * D).
AutomorphismPair exp_automorphism(const Derivation& d, const Polynomial& f,
                                  unsigned bound = kDefaultNilpotencyBound);

// The formal flow exp(-lam * D) over the extended ring Q[x_1..x_n, lam]:
// x_i -> sum_j (-lam)^j D^j(x_i) / j!, and lam -> lam.  Substituting a kernel
// element for lam recovers exp_derivation with f = -that element.
Endomorphism formal_exponential(const Derivation& d, unsigned bound = kDefaultNilpotencyBound);

// For P(s) = sum_k coeffs[k] * s^k with every coefficient in ker D, the
// formal flow acts by translating the slice: exp(-lam*D)(P(s)) = P(s - lam).
// Returns the difference of the two sides (zero iff the identity holds).
struct TranslationCheck {
    bool ok;
    Polynomial residual;  // lives in the lam-extended ring
};

TranslationCheck check_translation_identity(const Derivation& d, const Polynomial& s,
                                            std::span<const Polynomial> coeffs,
                                            unsigned bound = kDefaultNilpotencyBound);

// Projection onto ker D along the slice: pi(b) = sum_j (-s)^j D^j(b) / j!.
// Requires D(s) = 1 and confirmed local nilpotency; the result is checked to
// lie in ker D before being returned.
Polynomial kernel_projection(const Derivation& d, const Polynomial& s, const Polynomial& b,
                             unsigned bound = kDefaultNilpotencyBound);

// Coefficients (a_0, .., a_m) of the finite expansion b = sum_i a_i s^i with
// every a_i in ker D, namely a_i = pi(D^i(b)) / i!.  Trailing zero
// coefficients are stripped (but a_0 is always present), and both the
// reconstruction identity and kernel membership of each a_i are re-verified.
std::vector<Polynomial> slice_expansion(const Derivation& d, const Polynomial& s,
                                        const Polynomial& b,
                                        unsigned bound = kDefaultNilpotencyBound);

}  // namespace slicekit
