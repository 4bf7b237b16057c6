// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Expected full runtime is a few minutes on one core.
#include <chrono>
#include <cstdio>
#include <filesystem>

#include "ccf/numerics.hpp"
#include "ccf/verify.hpp"

using ccf::checks::CheckResult;

namespace {

int g_failures = 0;

void report(int number, const char* label, double seconds, const CheckResult& result,
            bool time_ok = true, double budget = 0.0) {
    bool pass = result.pass && time_ok;
    if (!pass) ++g_failures;
    std::printf("%s %2d %-28s (%6.1fs%s): %s%s\n", pass ? "PASS" : "FAIL", number, label, seconds,
                budget > 0 ? (" / " + std::to_string(static_cast<int>(budget)) + "s budget").c_str()
                           : "",
                result.detail.c_str(), time_ok ? "" : " [over time budget]");
    std::fflush(stdout);
}

template <class F>
void run(int number, const char* label, double budget_seconds, F&& body) {
    auto start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
        result = body();
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = std::string("threw: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool time_ok = budget_seconds <= 0 || seconds <= budget_seconds;
    report(number, label, seconds, result, time_ok, budget_seconds);
}

CheckResult merge(const char* name, std::initializer_list<CheckResult> parts) {
    CheckResult out;
    out.name = name;
    out.pass = true;
    for (const auto& part : parts) {
        out.pass = out.pass && part.pass;
        if (!out.detail.empty()) out.detail += " | ";
        out.detail += part.name + ": " + part.detail;
    }
    return out;
}

} // namespace

int main() {
    ccf::set_cache_dir(std::filesystem::temp_directory_path() / "ccf-acceptance-cache");
    using namespace ccf::checks;

    run(1, "initial-table", 120, [] { return check_initial_table(12000, 250); });
    run(2, "closed-forms", 900, [] { return check_closed_forms(6, 20, 12000, 250, 150, 0); });
    run(3, "delta-compact", 0, [] { return check_delta_equivalence(100); });
    run(4, "generic-recursion", 0, [] { return check_generic_recursion(); });
    run(5, "rho-conjecture", 0, [] { return check_rho_table(); });
    run(6, "subtable-reproduction", 0, [] { return check_subtables(12000, 250, 50); });
    run(7, "generator-table", 0, [] {
        ccf::DiscoveryConfig cfg;
        cfg.depth = 4000;
        cfg.digits = 120;
        cfg.min_verified_digits = 50;
        cfg.max_rounds = 3;
        return check_ij_table(cfg);
    });
    run(8, "ratio-identities", 0, [] { return check_ratio_identities(2, 10, 12000, 250); });
    run(9, "bootstrap-roundtrip", 0, [] { return check_bootstrap_roundtrip(12000, 250); });
    run(10, "challenge-tooling", 0,
        [] { return merge("fit+recurrence", {check_fit_tooling(), check_recurrence_tooling()}); });
    run(11, "property-suites", 0, [] {
        return merge("lll+normalize+datafile+factorize",
                     {check_lll_properties(200), check_normalize_property(10000),
                      check_datafile_roundtrip(), check_factorize_property(100000)});
    });
    run(12, "no-g-limits", 0, [] { return check_no_g_limits(12000, 250, 30); });

    if (g_failures) {
        std::printf("%d criteria FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
