#pragma once

#include <filesystem>
#include <string>

namespace ccf {

/// Effective run configuration. Precedence: flags > environment > config
/// file (key=value lines) > defaults.
struct RunConfig {
    int digits = 250;
    int depth = 12000;
    long c_min = 1, c_max = 3;
    int kappa_min = 0, kappa_max = 2;
    std::filesystem::path cache;
    std::string format = "brace";
    int jobs = 1;

    void validate() const;
};

/// Apply config-file then environment overrides (CCF_DIGITS, CCF_DEPTH,
/// CCF_JOBS, CCF_CACHE_DIR); flag overrides happen in the CLI layer.
RunConfig load_config(const std::filesystem::path& config_file = {});

} // namespace ccf
