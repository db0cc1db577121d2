#pragma once

#include "rootstab/numlat.hpp"

#include <string>
#include <vector>

namespace rootstab {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    unsigned long long seed = 20240801ULL;
};

/// Runs the randomized cross-module invariant suite against one config and
/// reports one pass/fail entry per property. Deterministic for a fixed
/// seed.
std::vector<PropertyResult> run_verify(const RootStackConfig& cfg, const VerifyOptions& opts = {});

} // namespace rootstab
