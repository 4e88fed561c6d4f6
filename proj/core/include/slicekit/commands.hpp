#pragma once

#include <iosfwd>
#include <optional>

#include "slicekit/problem.hpp"
#include "slicekit/report.hpp"

namespace slicekit {

struct RunOptions {
    std::optional<unsigned> nilpotency_bound;  // --bound
    std::optional<unsigned> degree_bound;      // --degree (kernel command)
    bool use_ideal = false;                    // kernel --ideal
    bool json_only = false;
    bool quiet = false;
};

// Identity checks: local nilpotency, the slice equation, the closed form,
// the flow translation identity, action agreement along all three routes,
// the infinitesimal generator, the group law and the eigenvalue table.
Report run_verify(const ProblemSpec& spec, const RunOptions& options = {});

// Normalization conditions and, when they hold, the linearization
// certificate with its diagonal factorization and the kernel criterion.
Report run_linearize(const ProblemSpec& spec, const RunOptions& options = {});

// Degree-bounded kernel bases; with several derivations the common kernel
// and the obstruction witness; with --ideal the quotient-ring variant.
Report run_kernel(const ProblemSpec& spec, const RunOptions& options = {});

// Built-in corpus: list entries, or run the full pipeline over every entry
// (entries are checked concurrently, reported in fixed order).
Report run_corpus(bool list_only, const RunOptions& options = {});

// Render human text plus fenced JSON (or bare JSON with --json-only) and
// return the report's exit code.
int emit(const Report& report, std::ostream& os, const RunOptions& options = {});

}  // namespace slicekit
