#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mycubic {

struct VerifyOptions {
    long grid_points = 1000;
    double x_min = 1e-6;
    double x_max = 1e6;
    std::uint64_t seed = 42;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    long samples = 0;
    std::string failure;  // "input=... expected=... got=..." for the first miss
};

/// Run the full invariant suite of every module at the requested grid
/// density. Deterministic for a fixed seed.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

}  // namespace mycubic
