#include <sstream>

#include "ccf/challenge.hpp"

namespace ccf {

BigInt FactoredInt::reconstruct() const {
    BigInt r = cofactor;
    for (const auto& [p, e] : factors) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        r *= pe;
    }
    return sign < 0 ? BigInt(-r) : r;
}

std::string FactoredInt::to_string() const {
    std::ostringstream out;
    if (sign < 0) out << "-";
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) out << "*";
        out << p.get_str();
        if (e > 1) out << "^" << e;
        first = false;
    }
    if (cofactor != 1 || first) {
        if (!first) out << "*";
        out << cofactor.get_str();
    }
    return out.str();
}

namespace {

void add_factor(FactoredInt& f, const BigInt& p, unsigned e = 1) { f.factors[p] += e; }

// Pollard rho (Brent variant), bounded iteration count.
BigInt pollard_rho(const BigInt& n, unsigned long max_iters) {
    if (max_iters == 0) return 1;
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEUL);
    for (int attempt = 0; attempt < 8; ++attempt) {
        BigInt x = rng.get_z_range(n - 2) + 2;
        BigInt y = x, c = rng.get_z_range(n - 1) + 1, d = 1;
        unsigned long it = 0;
        while (d == 1 && it++ < max_iters) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(BigInt(x > y ? x - y : y - x), n);
        }
        if (d != 1 && d != n) return d;
    }
    return 1;
}

void factor_remainder(FactoredInt& out, BigInt n, unsigned long rho_iters, int depth) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        add_factor(out, n);
        return;
    }
    if (depth <= 0) {
        out.cofactor *= n;
        return;
    }
    BigInt d = pollard_rho(n, rho_iters);
    if (d == 1 || d == n) {
        out.cofactor *= n;
        return;
    }
    factor_remainder(out, d, rho_iters, depth - 1);
    factor_remainder(out, n / d, rho_iters, depth - 1);
}

} // namespace

FactoredInt factorize(const BigInt& n, unsigned long smooth_bound, unsigned long rho_iters) {
    if (n == 0) throw std::invalid_argument("factorize: n must be nonzero");
    FactoredInt out;
    out.sign = n < 0 ? -1 : 1;
    BigInt m = ::abs(n);

    while (m % 2 == 0) {
        add_factor(out, 2);
        m /= 2;
    }
    for (unsigned long p = 3; p <= smooth_bound && m > 1; p += 2) {
        if (BigInt(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            add_factor(out, p);
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    if (m > 1) factor_remainder(out, m, rho_iters, 32);
    return out;
}

FactoredInt parse_factored(const std::string& text) {
    FactoredInt out;
    std::string s = text;
    if (!s.empty() && s[0] == '-') {
        out.sign = -1;
        s.erase(0, 1);
    }
    if (s.empty()) throw std::invalid_argument("parse_factored: empty input");
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, '*')) {
        auto caret = tok.find('^');
        BigInt base;
        unsigned long exp = 1;
        try {
            base = BigInt(tok.substr(0, caret));
            if (caret != std::string::npos) exp = std::stoul(tok.substr(caret + 1));
        } catch (...) {
            throw std::invalid_argument("parse_factored: bad token '" + tok + "'");
        }
        if (base == 1 && caret == std::string::npos) continue;
        if (base < 2) throw std::invalid_argument("parse_factored: bad base in '" + tok + "'");
        out.factors[base] += static_cast<unsigned>(exp);
    }
    return out;
}

} // namespace ccf
