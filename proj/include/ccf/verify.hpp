#pragma once

#include <string>
#include <vector>

#include "ccf/discovery.hpp"

namespace ccf::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Known limit triples for the nine (delta, epsilon, tau, eta) columns,
// indexed by mu = 0..6, plus the seven sporadic rows.
CheckResult check_initial_table(long depth, int digits);
CheckResult check_closed_forms(int kappa_max, long c_max, long depth, int digits,
                               long min_agree, int jobs);
CheckResult check_delta_equivalence(long c_max);
CheckResult check_generic_recursion();
CheckResult check_rho_table();
CheckResult check_subtables(long depth, int digits, long min_verified);
CheckResult check_ij_table(const ccf::DiscoveryConfig& cfg);
CheckResult check_ratio_identities(long c_lo, long c_hi, long depth, int digits);
CheckResult check_bootstrap_roundtrip(long depth, int digits);
CheckResult check_fit_tooling();
CheckResult check_recurrence_tooling();
CheckResult check_lll_properties(int bases);
CheckResult check_normalize_property(int trials);
CheckResult check_datafile_roundtrip();
CheckResult check_factorize_property(int trials);
CheckResult check_no_g_limits(long depth, int digits, long min_agree);

std::vector<CheckResult> run_checks(const std::vector<std::string>& names);
std::vector<std::string> check_names();

}  // namespace ccf::checks
