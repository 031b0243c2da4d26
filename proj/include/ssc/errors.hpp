#pragma once

#include <stdexcept>

namespace ssc {

// One exception type per rejectable condition; all derive from
// std::runtime_error so the CLI can catch and report uniformly.

struct InseparableModel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p divides the cover degree m; the model is not tame.
struct WildCover : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gcd(m, deg f) is neither 1 nor m.
struct UnsupportedInfinity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroConstantTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration would exceed the configured element budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Newton recurrence division failed; signals a counting bug upstream.
struct NonIntegralCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeilViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RamifiedPrime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ssc
