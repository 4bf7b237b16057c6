#pragma once

#include <optional>

#include "ccf/cf.hpp"
#include "ccf/lattice.hpp"

namespace ccf {

struct DiscoveryConfig {
    int depth = 12000;
    int digits = 250;
    int max_coeff_digits = 0; // 0: derived from digits
    int min_verified_digits = 50;
    int max_rounds = 3; // depth/digits doubled between rounds
};

struct Discovery {
    GLimit triple;
    int verified_digits = 0;
    int depth = 0;
    int digits = 0;
};

/// Evaluate the continued fraction and recover its G-relation, raising depth
/// and precision until verification reaches min_verified_digits.
std::optional<Discovery> discover_limit(const CFSpec& cf, const DiscoveryConfig& config = {});

} // namespace ccf
