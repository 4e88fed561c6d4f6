#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slicekit/endomorphism.hpp"
#include "slicekit/polynomial.hpp"

namespace slicekit {

// A fully parsed problem file.  The file format is a small TOML subset; see
// the repository README for the complete key reference.  Summary:
//
//   [ring]        vars = ["x", "y", "z"]          (required)
//   [derivation]  one key per variable            (required)
//   [derivation2] ... [derivationK]               (optional, extra family members)
//   [slice]       s = "..."
//   [action]      N = <nonzero integer>           (default 1)
//   [phi]         one key per variable
//   [phi_inv]     one key per variable
//   [kernel]      gens = ["...", ...]
//   [ideal]       gens = ["...", ...]
//   [bounds]      degree = 8, nilpotency = 64
//
// Variable names "t" and "lam" are reserved for the action parameter and the
// formal flow parameter and are rejected.
struct ProblemSpec {
    VarContext ctx;
    std::vector<Polynomial> derivation_images;
    std::vector<std::vector<Polynomial>> extra_derivations;
    std::optional<Polynomial> slice;
    std::int64_t weight = 1;                       // N
    std::optional<std::vector<Polynomial>> phi_images;
    std::optional<std::vector<Polynomial>> phi_inverse_images;
    std::vector<Polynomial> kernel_generators;
    std::vector<Polynomial> ideal_generators;
    unsigned degree_bound = 8;
    unsigned nilpotency_bound = 64;

    Derivation derivation() const { return Derivation(ctx, derivation_images); }

    std::vector<Derivation> derivation_family() const;

    bool has_automorphism() const { return phi_images && phi_inverse_images; }

    // Builds and verifies the pair; NotInverseError if the two maps are not
    // mutually inverse, Error if either table is absent.
    AutomorphismPair automorphism() const;
};

// Throws ProblemFormatError (with the offending line or key path in the
// message) on structural problems, including polynomial syntax errors inside
// values.
ProblemSpec parse_problem(std::string_view text);

ProblemSpec load_problem_file(const std::string& path);

}  // namespace slicekit
