#include "ccf/kappa.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

namespace fs = std::filesystem;

namespace ccf {

BigInt semifactorial(long n) {
    if (n < -1 || n % 2 == 0) throw std::invalid_argument("semifactorial: need odd n >= -1");
    BigInt r = 1;
    for (long k = n; k > 1; k -= 2) r *= k;
    return r;
}

BigInt catalan_number(long n) {
    if (n < 0) throw std::invalid_argument("catalan_number: need n >= 0");
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    return b / (n + 1);
}

Rational rho(int kappa) {
    if (kappa < 1)
        throw std::invalid_argument("rho: kappa=0 is the exception, not covered by the ratio rule");
    BigInt num;
    mpz_ui_pow_ui(num.get_mpz_t(), 4, static_cast<unsigned long>(kappa - 1));
    BigInt den = BigInt(2 * kappa - 1) * catalan_number(kappa - 1);
    return make_rational(num, den);
}

namespace {

BigInt factorial(long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::mutex g_params_mutex;
std::map<int, KappaParams> g_registered;

fs::path params_path(int kappa) {
    return cache_dir() / ("kappa_" + std::to_string(kappa) + ".params");
}

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::runtime_error("bad rational: " + s);
    r.canonicalize();
    return r;
}

std::optional<KappaParams> load_persisted(int kappa) {
    std::ifstream in(params_path(kappa));
    if (!in) return std::nullopt;
    KappaParams p;
    p.kappa = kappa;
    std::string line;
    int seen = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) return std::nullopt;
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        try {
            if (key == "kappa" && std::stoi(val) != kappa) return std::nullopt;
            else if (key == "sigma_num") { p.sigma_num = BigInt(val); ++seen; }
            else if (key == "sigma_den") { p.sigma_den = BigInt(val); ++seen; }
            else if (key == "A") { p.seed_a = parse_rational(val); ++seen; }
            else if (key == "B") { p.seed_b = parse_rational(val); ++seen; }
        } catch (...) {
            return std::nullopt;
        }
    }
    if (seen != 4) return std::nullopt;
    return p;
}

// Built-in reference table. The kappa=4 seed
// constant is 1373: the commonly quoted 1327 contradicts both the recursion and the
// continued fraction (see tests).
const std::map<int, KappaParams>& builtin_params() {
    static const std::map<int, KappaParams> table = [] {
        std::map<int, KappaParams> t;
        auto add = [&](int k, BigInt sn, BigInt sd, Rational a, Rational b) {
            t[k] = KappaParams{k, std::move(sn), std::move(sd), std::move(a), std::move(b)};
        };
        add(0, 1, 2, Rational(10), Rational(1));
        add(1, 2, 2, Rational(-2), Rational(1));
        add(2, 8, 6, Rational(12), Rational(1));
        add(3, 432, 270, Rational(22), Rational(-31));
        add(4, factorial(5) * factorial(6), BigInt(14) * 15 * 15 * 15, Rational(-10448),
            Rational(1373));
        add(5, BigInt(2) * 140 * 140 * factorial(5), BigInt(2) * 105 * 105 * 105,
            Rational(150002), Rational(-10891));
        add(6, BigInt(12) * semifactorial(7) * factorial(10),
            BigInt(2) * semifactorial(7) * semifactorial(9) * semifactorial(11),
            Rational(-23021852), Rational(1167809));
        BigInt df11sq = semifactorial(11) * semifactorial(11);
        add(7, 1024, 429, make_rational(2258335679, 35 * df11sq),
            make_rational(-176673487, 70 * df11sq));
        return t;
    }();
    return table;
}

} // namespace

KappaParams kappa_params(int kappa) {
    if (kappa < 0) throw std::invalid_argument("kappa_params: kappa must be >= 0");
    if (auto it = builtin_params().find(kappa); it != builtin_params().end()) return it->second;
    {
        std::lock_guard lock(g_params_mutex);
        if (auto it = g_registered.find(kappa); it != g_registered.end()) return it->second;
    }
    if (auto p = load_persisted(kappa)) {
        std::lock_guard lock(g_params_mutex);
        g_registered[kappa] = *p;
        return *p;
    }
    throw missing_params("kappa_params: no parameters on record for kappa=" +
                         std::to_string(kappa) + "; use bootstrap");
}

namespace {
void invalidate_delta_memo(int kappa);
}

void register_params(const KappaParams& params, bool persist) {
    {
        std::lock_guard lock(g_params_mutex);
        g_registered[params.kappa] = params;
    }
    invalidate_delta_memo(params.kappa);
    if (persist) {
        std::ostringstream out;
        out << "# bootstrapped closed-form parameters (not from the built-in table)\n"
            << "kappa=" << params.kappa << "\n"
            << "sigma_num=" << params.sigma_num.get_str() << "\n"
            << "sigma_den=" << params.sigma_den.get_str() << "\n"
            << "A=" << params.seed_a.get_str() << "\n"
            << "B=" << params.seed_b.get_str() << "\n";
        fs::create_directories(cache_dir());
        fs::path path = params_path(params.kappa);
        fs::path tmp = path;
        tmp += ".tmp";
        std::ofstream f(tmp, std::ios::trunc);
        f << out.str();
        f.close();
        fs::rename(tmp, path);
    }
}

std::pair<PolyInt, PolyInt> delta_recursion_polys(int kappa) {
    // p(c) = 8c^2 + (2-8k)c + (1-2k)
    PolyInt p{BigInt(1 - 2 * kappa), BigInt(2 - 8 * kappa), BigInt(8)};
    // q(c) = -2c (2c-1) (2c - (2k+1))^2
    PolyInt lin = PolyInt::linear(2, -(2 * kappa + 1));
    PolyInt q = PolyInt{0, -2} * PolyInt::linear(2, -1) * lin * lin;
    return {p, q};
}

namespace {
std::mutex g_delta_mutex;
std::map<int, std::vector<Rational>> g_delta_memo;
long g_delta_c_max = 200;

void invalidate_delta_memo(int kappa) {
    std::lock_guard lock(g_delta_mutex);
    g_delta_memo.erase(kappa);
}
} // namespace

long delta_c_max() { return g_delta_c_max; }
void set_delta_c_max(long c_max) { g_delta_c_max = c_max; }

Rational delta(int kappa, long c) {
    if (c < 0) throw std::invalid_argument("delta: c must be >= 0");
    if (c > g_delta_c_max)
        throw std::invalid_argument("delta: c exceeds configured cap of " +
                                    std::to_string(g_delta_c_max));
    KappaParams params = kappa_params(kappa);
    auto [p, q] = delta_recursion_polys(kappa);

    std::lock_guard lock(g_delta_mutex);
    auto& memo = g_delta_memo[kappa];
    if (memo.empty()) {
        memo.push_back(params.seed_b);
        memo.push_back(params.seed_a + params.seed_b);
    }
    while (static_cast<long>(memo.size()) <= c) {
        long n = static_cast<long>(memo.size());
        Rational pn(p.eval(BigInt(n))), qn(q.eval(BigInt(n)));
        memo.push_back(pn * memo[n - 1] + qn * memo[n - 2]);
    }
    return memo[static_cast<size_t>(c)];
}

BigInt delta0_compact(long c) {
    if (c < 0) throw std::invalid_argument("delta0_compact: c must be >= 0");
    BigInt d = 1;
    for (long k = 1; k <= c; ++k) d = factorial(2 * k) + BigInt(2 * k + 1) * (2 * k + 1) * d;
    return d;
}

QClosed q_closed(int kappa, long c) {
    if (c < 1) throw std::invalid_argument("q_closed: c must be >= 1");
    KappaParams params = kappa_params(kappa);

    BigInt alpha = params.sigma_num * factorial(2 * c);
    BigInt df = semifactorial(2 * c - 1);
    BigInt gamma = params.sigma_den * df * df;
    Rational d = delta(kappa, c - 1);
    Rational beta_q;
    if (kappa == 0) {
        beta_q = -d;
    } else {
        BigInt prefix = 1;
        for (int t = 1; t <= kappa; ++t) prefix *= BigInt(2 * c - (2 * t - 1));
        beta_q = Rational(prefix) * d;
    }
    // clear the Delta denominator into a common integer scale
    const BigInt& den = beta_q.get_den();
    QClosed out;
    out.raw = {alpha * den, BigInt(beta_q.get_num()), gamma * den};
    out.canonical = normalize(out.raw[0], out.raw[1], out.raw[2]);
    return out;
}

HPReal q_closed_numeric(int kappa, long c, int digits) {
    QClosed q = q_closed(kappa, c);
    HPReal g = catalan(digits);
    HPReal den = HPReal::from_int(q.raw[1], digits) + HPReal::from_int(q.raw[2], digits) * g;
    return HPReal::from_int(q.raw[0], digits) / den;
}

KappaParams bootstrap(int kappa, const HPReal& q1, const HPReal& q2, const HPReal& g) {
    if (kappa < 1) throw std::invalid_argument("bootstrap: kappa must be >= 1");
    const int prec = std::min({q1.precision_digits(), q2.precision_digits(),
                               g.precision_digits()});
    if (prec < 150) throw std::invalid_argument("bootstrap: need limits at >= 150 digits");

    Rational sigma_den_r = 1 / rho(kappa); // sigma_num arbitrarily 1

    // (2c)!/q_c = sigma_den ((2c-1)!!)^2 g + P(c) (A(c-1) + B), c = 1, 2
    auto lhs = [&](long c) {
        BigInt df = semifactorial(2 * c - 1);
        HPReal t = HPReal::from_int(factorial(2 * c), prec) / (c == 1 ? q1 : q2);
        return t - HPReal::from_rational(sigma_den_r * df * df, prec) * g;
    };
    auto prefix = [&](long c) {
        BigInt p = 1;
        for (int t = 1; t <= kappa; ++t) p *= BigInt(2 * c - (2 * t - 1));
        return p;
    };

    HPReal b_num = lhs(1) / HPReal::from_int(prefix(1), prec);
    HPReal ab_num = lhs(2) / HPReal::from_int(prefix(2), prec); // A + B

    BigInt den_bound;
    mpz_ui_pow_ui(den_bound.get_mpz_t(), 10, static_cast<unsigned long>(prec / 4));
    auto b_rec = rational_reconstruct(b_num, den_bound);
    auto ab_rec = rational_reconstruct(ab_num, den_bound);
    if (!b_rec || !ab_rec)
        throw std::runtime_error("bootstrap: insufficient precision for rational reconstruction");
    Rational seed_b = *b_rec;
    Rational seed_a = *ab_rec - seed_b;

    // rescale (1, sigma_den, A, B) by the lcm of the denominators
    BigInt scale = 1;
    for (const Rational* r : {&sigma_den_r, &seed_a, &seed_b})
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r->get_den().get_mpz_t());

    KappaParams out;
    out.kappa = kappa;
    out.sigma_num = scale;
    Rational sd = sigma_den_r * scale;
    out.sigma_den = sd.get_num();
    out.seed_a = seed_a * scale;
    out.seed_b = seed_b * scale;
    return out;
}

} // namespace ccf
