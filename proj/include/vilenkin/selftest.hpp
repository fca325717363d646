#pragma once

#include <string>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Runs the identity checks on one structure: block Dirichlet indicators,
/// orthonormality, round trip, energy identity, translation modulation,
/// Cesaro number identities, and the two integral zero identities.
std::vector<CheckResult> run_selftest(const RadixStructure& s, std::uint64_t seed);

}  // namespace vilenkin
