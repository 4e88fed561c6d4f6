#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slicekit/flow.hpp"
#include "slicekit/laurent.hpp"

namespace slicekit {

// Generator images of a one-parameter diagonalizable action, i.e. the
// coaction R -> R[t, 1/t].  Construction checks the unit law: specializing
// t := 1 must give back every generator (NotActionError otherwise).
class ActionImages {
public:
    ActionImages(VarContext ctx, std::vector<LaurentPoly> images);

    const VarContext& context() const { return ctx_; }
    const std::vector<LaurentPoly>& images() const { return images_; }
    const LaurentPoly& image(std::size_t i) const;

    // Extend multiplicatively to an arbitrary ring element.
    LaurentPoly apply(const Polynomial& b) const;

    friend bool operator==(const ActionImages& a, const ActionImages& b) {
        return a.ctx_ == b.ctx_ && a.images_ == b.images_;
    }
    friend bool operator!=(const ActionImages& a, const ActionImages& b) { return !(a == b); }

private:
    VarContext ctx_;
    std::vector<LaurentPoly> images_;
};

// The semisimple derivation N*s*D attached to a derivation with slice s and
// a nonzero integer weight N.  Throws SliceError unless D(s) = 1.
Derivation semisimple_generator(const Derivation& d, const Polynomial& s, std::int64_t N);

// Action of t on b through the slice expansion b = sum a_i s^i: each graded
// piece a_i s^i is scaled by t^(N*i).
LaurentPoly weight_action(const Derivation& d, const Polynomial& s, std::int64_t N,
                          const Polynomial& b, unsigned bound = kDefaultNilpotencyBound);

// Closed form available when D^2 kills every generator:
//   x_i -> x_i - (1 - t^N) * s * D(x_i).
// Throws NotNiceError otherwise.
ActionImages nice_action(const Derivation& d, const Polynomial& s, std::int64_t N);

// Action obtained by substituting lam := (1 - t^N) * s into the formal flow
// exp(-lam * D).  Defined for any locally nilpotent D with slice s.
ActionImages flow_action(const Derivation& d, const Polynomial& s, std::int64_t N,
                         unsigned bound = kDefaultNilpotencyBound);

// Generator-by-generator comparison; on mismatch carries the first differing
// generator and the difference of its images.
struct ActionComparison {
    bool equal;
    std::optional<std::size_t> witness;
    LaurentPoly difference;
};

ActionComparison compare_actions(const ActionImages& a, const ActionImages& b);

// d/dt at t = 1 of the action, as a derivation.  This recovers the
// semisimple generator from the action itself.
Derivation infinitesimal_generator(const ActionImages& a);

// Compatibility law: acting by t and then by u equals acting by t*u.
// Verified exactly in Q[x][t,1/t,u,1/u] generator by generator.
struct GroupLawCheck {
    bool ok;
    std::optional<std::size_t> witness;
    std::string detail;
};

GroupLawCheck check_group_law(const Derivation& d, const Polynomial& s, std::int64_t N,
                              unsigned bound = kDefaultNilpotencyBound);

// Eigenvalue table for the semisimple generator on elements a * s^m with a
// ranging over supplied kernel elements and 0 <= m <= m_max: each row checks
// the exact eigenvalue N*m.  Kernel membership of each a is re-verified
// (KernelMembershipError otherwise).
struct EigenRow {
    std::size_t element;   // index into the supplied kernel elements
    unsigned power;        // m
    Rational eigenvalue;   // expected N*m
    bool ok;
};

struct EigenTable {
    bool all_ok;
    std::vector<EigenRow> rows;
};

EigenTable eigenvalue_table(const Derivation& d, const Polynomial& s, std::int64_t N,
                            std::span<const Polynomial> kernel_elements, unsigned m_max = 5);

}  // namespace slicekit
