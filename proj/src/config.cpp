#include "ccf/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace ccf {

void RunConfig::validate() const {
    if (digits < 30) throw std::invalid_argument("config: digits must be >= 30");
    if (depth < 100) throw std::invalid_argument("config: depth must be >= 100");
    if (c_min > c_max || kappa_min > kappa_max)
        throw std::invalid_argument("config: empty c or kappa range");
    if (jobs < 1) throw std::invalid_argument("config: jobs must be >= 1");
}

RunConfig load_config(const std::filesystem::path& config_file) {
    RunConfig cfg;
    auto apply = [&](const std::string& key, const std::string& value) {
        if (key == "digits") cfg.digits = std::stoi(value);
        else if (key == "depth") cfg.depth = std::stoi(value);
        else if (key == "c_min") cfg.c_min = std::stol(value);
        else if (key == "c_max") cfg.c_max = std::stol(value);
        else if (key == "kappa_min") cfg.kappa_min = std::stoi(value);
        else if (key == "kappa_max") cfg.kappa_max = std::stoi(value);
        else if (key == "cache_dir") cfg.cache = value;
        else if (key == "format") cfg.format = value;
        else if (key == "jobs") cfg.jobs = std::stoi(value);
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    };
    if (!config_file.empty()) {
        std::ifstream in(config_file);
        if (!in) throw std::invalid_argument("config: cannot open " + config_file.string());
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config: expected key=value, got '" + line + "'");
            apply(line.substr(0, eq), line.substr(eq + 1));
        }
    }
    if (const char* v = std::getenv("CCF_DIGITS"); v && *v) cfg.digits = std::atoi(v);
    if (const char* v = std::getenv("CCF_DEPTH"); v && *v) cfg.depth = std::atoi(v);
    if (const char* v = std::getenv("CCF_JOBS"); v && *v) cfg.jobs = std::atoi(v);
    if (const char* v = std::getenv("CCF_CACHE_DIR"); v && *v) cfg.cache = v;
    return cfg;
}

} // namespace ccf
