#pragma once

#include <stdexcept>
#include <string>

namespace bplink {

// A computation was refused because it would exceed a configured resource
// budget (lattice size, DP table size, memory, lcm cap). The caller can
// retry with a different method or a larger budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A floating-point evaluation could not certify its result to within the
// required error bound.
struct PrecisionInsufficient : std::runtime_error {
    explicit PrecisionInsufficient(const std::string& what) : std::runtime_error(what) {}
};

}
