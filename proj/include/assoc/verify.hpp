#pragma once
/**
 * Theorem-check runner behind `assoc verify`. The built-in manifest lists
 * every structural claim with its n range and number of seeded random
 * parameter draws; a JSON manifest may narrow or extend the ranges.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace assoc {

struct CheckSpec {
    std::string id;
    std::string target;  // the claim being checked, in words
    int n_min = 1;
    int n_max = 1;
    int draws = 0;       // seeded random parameter sets on top of the defaults
};

struct CheckOutcome {
    std::string id;
    std::string target;
    int n_min = 0;
    int n_max = 0;
    bool passed = false;
    bool skipped = false;
    std::string detail;
    nlohmann::json counterexample;  // null when passed
    double seconds = 0;
};

std::vector<CheckSpec> default_manifest();

/// {"checks": [{"id": ..., "n_min": ..., "n_max": ..., "draws": ...}, ...]}.
/// Unknown ids throw std::invalid_argument; omitted fields keep defaults.
std::vector<CheckSpec> manifest_from_json(const nlohmann::json& j);

/// Runs each check over [n_min, min(n_max, cap)]. Outcomes follow manifest order.
std::vector<CheckOutcome> run_manifest(const std::vector<CheckSpec>& manifest, int cap, std::uint64_t seed);

std::string format_outcome(const CheckOutcome& outcome);

}  // namespace assoc
