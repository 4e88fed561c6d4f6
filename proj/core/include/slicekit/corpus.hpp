#pragma once

#include <string>
#include <vector>

#include "slicekit/problem.hpp"

namespace slicekit {

// A built-in worked example.  Ring entries carry a derivation with slice,
// weight, automorphism and kernel generators; the quotient entry instead
// carries ideal generators plus a derivation expected to descend and one
// expected to be rejected.
struct CorpusEntry {
    std::string name;
    std::string description;
    ProblemSpec spec;
    bool quotient = false;
    std::vector<Polynomial> rejected_derivation_images;  // negative control (quotient only)
};

// The fixed example set: translation on Q[x]; coordinate derivation on
// Q[x,y] with straight and offset slices; an affine two-variable derivation
// with a nontrivial conjugator; four members of the rank-one family on
// Q[x,y,z]; and the Danielewski-style quotient.
const std::vector<CorpusEntry>& builtin_corpus();

}  // namespace slicekit
