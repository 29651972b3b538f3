// Error taxonomy shared by the whole library. The CLI maps these to exit
// codes, so keep the hierarchy flat and the categories stable.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquegraph {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad caller input: out-of-range vertex, loop edge, invalid family parameter.
struct invalid_argument_error : error {
    using error::error;
};

// Malformed serialized input (graph6 and friends). Carries the byte offset
// of the first offending byte.
struct parse_error : error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Work refused because it would exceed a configured budget (matrix size for
// exact arithmetic, node budget for isomorphism search). Never silent.
struct resource_limit_error : error {
    using error::error;
};

// Numeric computation failed or is too ambiguous to trust (non-convergence,
// eigenvalue groups wider than the tolerance allows).
struct numeric_error : error {
    using error::error;
};

// An operation that requires every edge to lie in exactly one clique of
// order omega was called on a graph where that fails.
struct not_clique_regular_error : error {
    using error::error;
};

// Hypothesis of the requested identity/classification not met (divisibility,
// regularity, lambda != omega-2, ...). Distinct from arithmetic failure.
struct not_applicable_error : error {
    using error::error;
};

// Internal cross-check failed: the inputs claim to satisfy a hypothesis but
// the guaranteed conclusion does not hold. Indicates inconsistent input
// (or a bug), so it is always loud.
struct theorem_violation_error : error {
    using error::error;
};

// Parameter set fails a feasibility condition (parameter identity, integer
// multiplicities).
struct infeasible_params_error : error {
    using error::error;
};

// Valid request outside the supported domain (e.g. non-prime-power field).
struct unsupported_error : error {
    using error::error;
};

// Filesystem trouble in the CLI layer.
struct io_error : error {
    using error::error;
};

}  // namespace cliquegraph
