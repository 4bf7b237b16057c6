#include "ccf/discovery.hpp"

namespace ccf {

std::optional<Discovery> discover_limit(const CFSpec& cf, const DiscoveryConfig& config) {
    int depth = config.depth;
    int digits = config.digits;
    for (int round = 0; round < config.max_rounds; ++round) {
        int mcd = config.max_coeff_digits > 0 ? config.max_coeff_digits : (digits - 20) / 3;
        HPReal q = eval_backward(cf, depth, digits);
        HPReal g = catalan(digits);
        auto rel = find_g_relation(q, g, mcd);
        if (rel) {
            int verified = rel->alpha == 0 && rel->beta == 0
                               ? digits // zero limit, nothing left to compare
                               : verify_relation(*rel, q, g);
            // agreement is capped by how far the fraction has converged
            if (verified >= config.min_verified_digits)
                return Discovery{*rel, verified, depth, digits};
        }
        depth *= 2;
        digits *= 2;
    }
    return std::nullopt;
}

} // namespace ccf
