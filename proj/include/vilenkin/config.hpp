#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "vilenkin/approximation.hpp"

namespace vilenkin {

/// Flat run configuration shared by the CLI subcommands. Values resolve
/// with precedence: command-line flag > config-file entry > built-in
/// default.
struct RunConfig {
    std::string radices = "2,3,2,3";
    int level = 0;  // 0 = take the parsed spec as-is
    double alpha = 0.5;
    std::string p = "inf";
    std::string function = "lacunary:beta=0.9";
    std::uint64_t seed = 42;
    std::string n_policy = "mk";
    int k_min = 0;  // 0 = derive from the structure
    int k_max = 0;
    std::string out;           // empty = stdout
    std::string format = "csv";

    /// Overrides fields present in a flat JSON object.
    void apply_json(const std::string& text);
};

/// Structure from the radices spec; a positive `level` longer than the
/// parsed list repeats the list cyclically up to that many digits.
RadixStructure resolve_structure(const RunConfig& config);

/// "1" | "2" | "inf" (or any real >= 1) to a norm exponent.
double parse_exponent(const std::string& token);

/// "mk" | "mk1" | "random:<seed>" to an in-block index policy.
NPolicy parse_npolicy(const std::string& token);

/// "lacunary:beta=0.9" | "indicator:r=2,label=0" | "random:seed=42,r=3"
/// evaluated against the structure.
StepFunction make_function(const std::string& spec, const RadixStructure& s);

}  // namespace vilenkin
