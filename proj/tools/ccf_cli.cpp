#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "ccf/challenge.hpp"
#include "ccf/config.hpp"
#include "ccf/discovery.hpp"
#include "ccf/families.hpp"
#include "ccf/kappa.hpp"
#include "ccf/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Selector {
    long kappa = -1, c = -1;
    std::vector<long> family; // delta, epsilon, tau, eta
    std::vector<long> ij;     // i, j
    long mu = 0;
    std::vector<long> poly_a, poly_b; // ascending coefficients

    ccf::CFSpec resolve() const {
        int picked = (kappa >= 0 || c >= 0) + !family.empty() + !ij.empty() +
                     (!poly_a.empty() || !poly_b.empty());
        if (picked != 1)
            throw CLI::ValidationError("selector",
                                       "pick exactly one of --kappa/--c, --family, --ij, --poly-a/--poly-b");
        if (kappa >= 0 || c >= 0) {
            if (kappa < 0 || c < 0)
                throw CLI::ValidationError("selector", "--kappa and --c go together");
            return ccf::kappa_cf(static_cast<int>(kappa), static_cast<int>(c));
        }
        if (!family.empty()) {
            if (family.size() != 4)
                throw CLI::ValidationError("selector", "--family wants delta,epsilon,tau,eta");
            return ccf::family_cf(
                ccf::FamilySpec{family[0], family[1], family[2], family[3], mu});
        }
        if (!ij.empty()) {
            if (ij.size() != 2) throw CLI::ValidationError("selector", "--ij wants i,j");
            return ccf::ij_family(ij[0], ij[1], mu);
        }
        if (poly_a.empty() || poly_b.empty())
            throw CLI::ValidationError("selector", "--poly-a and --poly-b go together");
        std::vector<ccf::BigInt> a(poly_a.begin(), poly_a.end());
        std::vector<ccf::BigInt> b(poly_b.begin(), poly_b.end());
        return ccf::CFSpec::make(ccf::PolyInt(a), 1, {ccf::PolyInt(b)});
    }
};

void add_selector(CLI::App* cmd, Selector& sel) {
    cmd->add_option("--kappa", sel.kappa, "kappa of the two-parameter family");
    cmd->add_option("--c", sel.c, "c of the two-parameter family");
    cmd->add_option("--family", sel.family, "delta,epsilon,tau,eta")->delimiter(',');
    cmd->add_option("--ij", sel.ij, "generator indices i,j")->delimiter(',');
    cmd->add_option("--mu", sel.mu, "running offset mu (family and ij selectors)");
    cmd->add_option("--poly-a", sel.poly_a, "ascending coefficients of a_n")->delimiter(',');
    cmd->add_option("--poly-b", sel.poly_b, "ascending coefficients of b_n")->delimiter(',');
}

struct GlobalOpts {
    std::string config_path;
    long digits = -1, depth = -1, jobs = -1;
    std::string cache;

    ccf::RunConfig resolve() const {
        ccf::RunConfig cfg = ccf::load_config(config_path);
        if (digits > 0) cfg.digits = static_cast<int>(digits);
        if (depth > 0) cfg.depth = static_cast<int>(depth);
        if (jobs > 0) cfg.jobs = static_cast<int>(jobs);
        if (!cache.empty()) cfg.cache = cache;
        cfg.validate();
        if (!cfg.cache.empty()) ccf::set_cache_dir(cfg.cache);
        return cfg;
    }
};

void add_globals(CLI::App& app, GlobalOpts& opts) {
    app.add_option("--config", opts.config_path, "key=value configuration file");
    app.add_option("--digits", opts.digits, "working precision in decimal digits");
    app.add_option("--depth", opts.depth, "continued-fraction truncation depth");
    app.add_option("--jobs", opts.jobs, "worker threads");
    app.add_option("--cache-dir", opts.cache, "cache directory");
}

int cmd_eval(const GlobalOpts& gopts, const Selector& sel, long print_digits, bool exact) {
    ccf::RunConfig cfg = gopts.resolve();
    ccf::CFSpec cf = sel.resolve();
    if (exact) {
        ccf::Rational conv = ccf::convergent_exact(cf, cfg.depth);
        std::cout << conv.get_str() << "\n";
        return kExitOk;
    }
    ccf::HPReal q = ccf::eval_backward(cf, cfg.depth, cfg.digits);
    int est = ccf::estimate_converged_digits(cf, cfg.depth / 2, cfg.digits);
    long shown = print_digits > 0 ? print_digits : std::min<long>(est, cfg.digits);
    if (shown < 1) shown = 1;
    std::cout << q.to_string(static_cast<int>(shown)) << "\n";
    std::cerr << "converged digits (estimate): " << est << "\n";
    return kExitOk;
}

int cmd_discover(const GlobalOpts& gopts, const Selector& sel, long min_verified) {
    ccf::RunConfig cfg = gopts.resolve();
    ccf::DiscoveryConfig dcfg;
    dcfg.depth = cfg.depth;
    dcfg.digits = cfg.digits;
    dcfg.min_verified_digits = static_cast<int>(min_verified);
    auto found = ccf::discover_limit(sel.resolve(), dcfg);
    if (!found) {
        std::cerr << "no integer relation found\n";
        return kExitVerification;
    }
    std::cout << found->triple.to_string() << "\n";
    std::cerr << "verified " << found->verified_digits << " digits (depth " << found->depth
              << ", precision " << found->digits << ")\n";
    return kExitOk;
}

int cmd_grid(const GlobalOpts& gopts, long kappa_min, long kappa_max, long c_min, long c_max,
             const std::string& out) {
    ccf::RunConfig cfg = gopts.resolve();
    std::filesystem::path out_path(out);
    ccf::DataFormat format = ccf::format_for_path(out_path);

    std::vector<ccf::GridRecord> existing;
    if (std::filesystem::exists(out_path)) {
        try {
            existing = ccf::read_data_file(out_path);
        } catch (const ccf::datafile_error& e) {
            std::cerr << "existing output unreadable, recomputing: " << e.what() << "\n";
        }
    }
    auto find_existing = [&](long c, long k) -> const ccf::GridRecord* {
        for (const auto& r : existing)
            if (r.c == c && r.kappa == k) return &r;
        return nullptr;
    };

    struct Cell {
        long kappa, c;
        std::optional<ccf::GridRecord> record;
        std::string error;
    };
    std::vector<Cell> cells;
    for (long k = kappa_min; k <= kappa_max; ++k)
        for (long c = c_min; c <= c_max; ++c) cells.push_back({k, c, std::nullopt, {}});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
            Cell& cell = cells[i];
            if (const auto* r = find_existing(cell.c, cell.kappa)) {
                cell.record = *r;
                continue;
            }
            try {
                auto closed = ccf::q_closed(static_cast<int>(cell.kappa), cell.c);
                cell.record = ccf::GridRecord{cell.c, cell.kappa, closed.raw[0], closed.raw[2]};
            } catch (const std::exception& e) {
                cell.error = e.what();
            }
        }
    };
    int jobs = std::max(1, cfg.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<ccf::GridRecord> records;
    std::vector<std::string> failures;
    for (const auto& cell : cells) {
        if (cell.record)
            records.push_back(*cell.record);
        else {
            std::ostringstream line;
            line << "c=" << cell.c << " kappa=" << cell.kappa << ": " << cell.error;
            failures.push_back(line.str());
        }
    }
    ccf::emit_data_file(records, out_path, format);
    if (format != ccf::DataFormat::factored) {
        std::filesystem::path fac = out_path;
        fac.replace_extension(".fac");
        ccf::emit_data_file(records, fac, ccf::DataFormat::factored);
    }
    std::filesystem::path report = out_path;
    report += ".report";
    if (failures.empty()) {
        std::filesystem::remove(report);
    } else {
        std::ofstream rep(report);
        for (const auto& line : failures) rep << line << "\n";
    }
    std::cout << records.size() << " records written to " << out_path.string() << "\n";
    if (!failures.empty()) {
        std::cerr << failures.size() << " cells failed, see " << report.string() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_verify(const GlobalOpts& gopts, std::vector<std::string> names) {
    gopts.resolve();
    if (names.empty()) names = ccf::checks::check_names();
    bool all_pass = true;
    for (const auto& name : names) {
        auto results = ccf::checks::run_checks({name});
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n"
                      << std::flush;
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? kExitOk : kExitVerification;
}

int cmd_bootstrap(const GlobalOpts& gopts, long kappa, bool persist) {
    ccf::RunConfig cfg = gopts.resolve();
    int k = static_cast<int>(kappa);
    ccf::HPReal g = ccf::catalan(cfg.digits);
    ccf::HPReal q1 = ccf::eval_backward(ccf::kappa_cf(k, 1), cfg.depth, cfg.digits);
    ccf::HPReal q2 = ccf::eval_backward(ccf::kappa_cf(k, 2), cfg.depth, cfg.digits);
    ccf::KappaParams params = ccf::bootstrap(k, q1, q2, g);
    std::cout << "kappa       " << k << "\n"
              << "sigma_num   " << params.sigma_num.get_str() << "\n"
              << "sigma_den   " << params.sigma_den.get_str() << "\n"
              << "seed        " << params.seed_a.get_str() << "*c + " << params.seed_b.get_str()
              << "\n";
    ccf::register_params(params, persist);
    ccf::HPReal q3 = ccf::eval_backward(ccf::kappa_cf(k, 3), cfg.depth, cfg.digits);
    ccf::HPReal predicted = ccf::q_closed_numeric(k, 3, cfg.digits);
    int agree = ccf::digits_agree(q3, predicted);
    std::cout << "forward check at c=3: " << agree << " digits\n";
    if (agree < 50) {
        std::cerr << "forward prediction too weak\n";
        return kExitVerification;
    }
    if (persist) std::cout << "persisted under " << ccf::cache_dir().string() << "\n";
    return kExitOk;
}

int cmd_factor(const std::string& value, unsigned long smooth_bound, unsigned long rho_iters) {
    ccf::BigInt n;
    try {
        n = ccf::BigInt(value);
    } catch (...) {
        throw CLI::ValidationError("factor", "not an integer: " + value);
    }
    std::cout << ccf::factorize(n, smooth_bound, rho_iters).to_string() << "\n";
    return kExitOk;
}

int cmd_fit(const GlobalOpts& gopts, const std::string& file, const std::string& column,
            int max_terms, long b_max, long kappa) {
    gopts.resolve();
    auto records = ccf::read_data_file(file);
    if (records.empty()) {
        std::cerr << "no records in " << file << "\n";
        return kExitVerification;
    }
    std::vector<std::pair<long, ccf::FactoredInt>> series;
    for (const auto& r : records) {
        if (kappa >= 0 && r.kappa != kappa) continue;
        ccf::BigInt v = column == "gamma" ? r.gamma : r.alpha;
        if (v == 0) continue;
        series.emplace_back(r.c, ccf::factorize(v));
    }
    ccf::FitBounds bounds;
    if (b_max > 0) bounds.b_max = b_max;
    auto fits = ccf::fit_building_blocks(series, bounds, max_terms);
    if (fits.empty()) {
        std::cerr << "no exact fit\n";
        return kExitVerification;
    }
    for (const auto& fit : fits) std::cout << fit.to_string() << "\n";
    return kExitOk;
}

int cmd_guess(const GlobalOpts& gopts, const std::string& file, long c0, int order, int degree) {
    gopts.resolve();
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("guess", "cannot read " + file);
    std::vector<ccf::Rational> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ccf::Rational v(line);
        v.canonicalize();
        values.push_back(v);
    }
    auto guess = ccf::guess_p_recurrence(values, c0, order, degree);
    if (!guess) {
        std::cerr << "no recurrence of order " << order << ", degree " << degree << "\n";
        return kExitVerification;
    }
    std::cout << guess->to_string() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Catalan-constant continued fraction toolkit"};
    app.require_subcommand(1);
    GlobalOpts gopts;
    add_globals(app, gopts);

    Selector eval_sel, disc_sel;
    long print_digits = 0;
    bool exact = false;
    auto* eval = app.add_subcommand("eval", "evaluate a continued fraction numerically");
    add_selector(eval, eval_sel);
    eval->add_option("--print-digits", print_digits, "digits to print (0: converged estimate)");
    eval->add_flag("--exact", exact, "print the exact convergent at the configured depth");

    auto* discover = app.add_subcommand("discover", "recover the G-relation of a limit");
    long min_verified = 50;
    add_selector(discover, disc_sel);
    discover->add_option("--min-verified", min_verified, "required verified digits");

    auto* grid = app.add_subcommand("grid", "emit a data file of closed-form grid values");
    long gk_min = 0, gk_max = 2, gc_min = 1, gc_max = 3;
    std::string grid_out = "grid.txt";
    grid->add_option("--kappa-min", gk_min);
    grid->add_option("--kappa-max", gk_max);
    grid->add_option("--c-min", gc_min);
    grid->add_option("--c-max", gc_max);
    grid->add_option("--out", grid_out, "output path (.txt brace, .csv, .fac factored)");

    auto* verify = app.add_subcommand("verify", "run named consistency checks");
    std::vector<std::string> check_list;
    verify->add_option("--check", check_list,
                       "check name (repeatable; default: all)")
        ->check(CLI::IsMember(ccf::checks::check_names()));

    auto* bootstrap = app.add_subcommand("bootstrap", "recover closed-form parameters numerically");
    long bk = 1;
    bool persist = false;
    bootstrap->add_option("--kappa", bk)->required();
    bootstrap->add_flag("--persist", persist, "store parameters under the cache directory");

    auto* factor = app.add_subcommand("factor", "factor an integer");
    std::string factor_value;
    unsigned long smooth_bound = 10000, rho_iters = 200000;
    factor->add_option("value", factor_value)->required();
    factor->add_option("--smooth-bound", smooth_bound);
    factor->add_option("--rho-iters", rho_iters);

    auto* fit = app.add_subcommand("fit", "fit factorial-type blocks to a data file column");
    std::string fit_file, fit_column = "alpha";
    int fit_terms = 2;
    long fit_b_max = 0, fit_kappa = -1;
    fit->add_option("file", fit_file)->required();
    fit->add_option("--column", fit_column)->check(CLI::IsMember({"alpha", "gamma"}));
    fit->add_option("--max-terms", fit_terms);
    fit->add_option("--b-max", fit_b_max, "offset bound for block arguments");
    fit->add_option("--kappa", fit_kappa, "restrict to one kappa row of the grid");

    auto* guess = app.add_subcommand("guess", "guess a polynomial-coefficient recurrence");
    std::string guess_file;
    long guess_c0 = 0;
    int guess_order = 2, guess_degree = 4;
    guess->add_option("file", guess_file, "one rational value per line")->required();
    guess->add_option("--c0", guess_c0, "index of the first value");
    guess->add_option("--order", guess_order);
    guess->add_option("--degree", guess_degree);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(gopts, eval_sel, print_digits, exact);
        if (discover->parsed()) return cmd_discover(gopts, disc_sel, min_verified);
        if (grid->parsed()) return cmd_grid(gopts, gk_min, gk_max, gc_min, gc_max, grid_out);
        if (verify->parsed()) return cmd_verify(gopts, check_list);
        if (bootstrap->parsed()) return cmd_bootstrap(gopts, bk, persist);
        if (factor->parsed()) return cmd_factor(factor_value, smooth_bound, rho_iters);
        if (fit->parsed()) return cmd_fit(gopts, fit_file, fit_column, fit_terms, fit_b_max, fit_kappa);
        if (guess->parsed()) return cmd_guess(gopts, guess_file, guess_c0, guess_order, guess_degree);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ccf::datafile_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
