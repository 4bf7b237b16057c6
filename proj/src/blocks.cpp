#include <algorithm>
#include <set>
#include <sstream>

#include "ccf/challenge.hpp"
#include "ccf/kappa.hpp"

namespace ccf {

std::string block_kind_name(BlockKind kind) {
    switch (kind) {
        case BlockKind::factorial: return "factorial";
        case BlockKind::semifactorial: return "semifactorial";
        case BlockKind::power2: return "2^";
        case BlockKind::catalan: return "C";
        case BlockKind::central_binomial: return "central_binomial";
    }
    return "?";
}

namespace {

long legendre(long m, const BigInt& p) {
    // valuation of m! at prime p
    long v = 0;
    BigInt q = p;
    while (q <= m) {
        v += static_cast<long>(BigInt(m / q).get_si());
        q *= p;
    }
    return v;
}

std::string arg_string(long a, long b) {
    std::ostringstream out;
    if (a != 1) out << a;
    out << "c";
    if (b > 0) out << "+" << b;
    if (b < 0) out << b;
    return out.str();
}

} // namespace

long block_valuation(BlockKind kind, long a, long b, const BigInt& p, long c) {
    long m = a * c + b;
    switch (kind) {
        case BlockKind::factorial:
            if (m < 0) throw std::domain_error("block_valuation: negative factorial argument");
            return legendre(m, p);
        case BlockKind::semifactorial: {
            if (m < -1 || m % 2 == 0)
                throw std::domain_error("block_valuation: semifactorial needs odd argument >= -1");
            if (m == -1) return 0;
            long k = (m + 1) / 2; // (2k-1)!! = (2k)! / (2^k k!)
            return legendre(2 * k, p) - legendre(k, p) - (p == 2 ? k : 0);
        }
        case BlockKind::power2:
            return p == 2 ? m : 0;
        case BlockKind::catalan: {
            if (m < 0) throw std::domain_error("block_valuation: negative Catalan index");
            long v = legendre(2 * m, p) - 2 * legendre(m, p);
            BigInt rem(m + 1);
            while (rem % p == 0) {
                --v;
                rem /= p;
            }
            return v;
        }
        case BlockKind::central_binomial:
            if (m < 0) throw std::domain_error("block_valuation: negative binomial index");
            return legendre(2 * m, p) - 2 * legendre(m, p);
    }
    throw std::logic_error("block_valuation: unknown kind");
}

bool BlockTemplate::domain_ok(long c) const {
    long m = a * c + b;
    switch (kind) {
        case BlockKind::factorial:
        case BlockKind::catalan:
        case BlockKind::central_binomial: return m >= 0;
        case BlockKind::semifactorial: return m >= -1 && m % 2 != 0;
        case BlockKind::power2: return true;
    }
    return false;
}

Rational BlockTemplate::value(long c) const {
    long m = a * c + b;
    switch (kind) {
        case BlockKind::factorial: {
            BigInt r;
            mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
            return Rational(r);
        }
        case BlockKind::semifactorial: return Rational(semifactorial(m));
        case BlockKind::power2: {
            BigInt r;
            mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(m < 0 ? -m : m));
            return m < 0 ? make_rational(1, r) : Rational(r);
        }
        case BlockKind::catalan: return Rational(catalan_number(m));
        case BlockKind::central_binomial: {
            BigInt r;
            mpz_bin_uiui(r.get_mpz_t(), 2 * static_cast<unsigned long>(m),
                         static_cast<unsigned long>(m));
            return Rational(r);
        }
    }
    throw std::logic_error("BlockTemplate::value: unknown kind");
}

long BlockTemplate::valuation(const BigInt& p, long c) const {
    return block_valuation(kind, a, b, p, c);
}

std::string BlockTemplate::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case BlockKind::factorial: out << "(" << arg_string(a, b) << ")!"; break;
        case BlockKind::semifactorial: out << "(" << arg_string(a, b) << ")!!"; break;
        case BlockKind::power2: out << "2^(" << arg_string(a, b) << ")"; break;
        case BlockKind::catalan: out << "C(" << arg_string(a, b) << ")"; break;
        case BlockKind::central_binomial: {
            std::string m = arg_string(a, b);
            out << "binom(2(" << m << "), " << m << ")";
            break;
        }
    }
    if (exponent != 1) out << "^" << exponent;
    return out.str();
}

Rational BlockFit::value(long c) const {
    Rational r = constant;
    for (const auto& t : terms) {
        Rational v = t.value(c);
        if (t.exponent >= 0) {
            for (int e = 0; e < t.exponent; ++e) r *= v;
        } else {
            for (int e = 0; e > t.exponent; --e) r /= v;
        }
    }
    return r;
}

std::string BlockFit::to_string() const {
    std::ostringstream out;
    out << constant.get_str();
    for (const auto& t : terms) out << " * " << t.to_string();
    return out.str();
}

namespace {

// Exact solve of (rows x cols) M e = rhs; empty when inconsistent or when the
// solution is not unique.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> m,
                                                 std::vector<Rational> rhs) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        std::swap(rhs[sel], rhs[r]);
        Rational inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
        rhs[r] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() < cols) return std::nullopt; // underdetermined
    for (size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt; // inconsistent
    std::vector<Rational> e(cols);
    for (size_t i = 0; i < pivot_col.size(); ++i) e[pivot_col[i]] = rhs[i];
    return e;
}

} // namespace

std::vector<BlockFit> fit_building_blocks(const std::vector<std::pair<long, FactoredInt>>& series,
                                          const FitBounds& bounds, int max_terms) {
    if (series.size() < 5)
        throw insufficient_data("fit_building_blocks: need at least 5 data points");
    for (const auto& [c, f] : series)
        if (!f.fully_factored())
            throw std::invalid_argument("fit_building_blocks: unfactored input at c=" +
                                        std::to_string(c));
    const int sign = series.front().second.sign;
    for (const auto& [c, f] : series)
        if (f.sign != sign) return {}; // no positive product matches a sign change

    auto pts = series;
    std::sort(pts.begin(), pts.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    // primes appearing in the data, plus the small ones a block always touches
    std::set<BigInt> prime_set{2, 3, 5, 7};
    for (const auto& [c, f] : pts)
        for (const auto& [p, e] : f.factors) prime_set.insert(p);
    std::vector<BigInt> primes(prime_set.begin(), prime_set.end());

    // candidate templates, valid across the whole data range
    std::vector<BlockTemplate> templates;
    for (BlockKind kind : {BlockKind::factorial, BlockKind::semifactorial, BlockKind::power2,
                           BlockKind::catalan, BlockKind::central_binomial}) {
        for (long a = -bounds.a_max; a <= bounds.a_max; ++a) {
            if (a == 0) continue;
            if (kind == BlockKind::power2 && a < 0) continue; // negative exponent covers it
            for (long b = -bounds.b_max; b <= bounds.b_max; ++b) {
                if (kind == BlockKind::power2 && b != 0) continue; // constant absorbs 2^b
                BlockTemplate t{kind, a, b, 1};
                bool ok = true;
                for (const auto& [c, f] : pts)
                    if (!t.domain_ok(c)) {
                        ok = false;
                        break;
                    }
                if (ok) templates.push_back(t);
            }
        }
    }

    // difference vectors kill the constant: rows indexed by (prime, adjacent pair)
    const size_t pairs = pts.size() - 1;
    auto diff_vector = [&](const BlockTemplate& t) {
        std::vector<Rational> v;
        v.reserve(primes.size() * pairs);
        for (const auto& p : primes)
            for (size_t k = 0; k < pairs; ++k)
                v.emplace_back(t.valuation(p, pts[k + 1].first) - t.valuation(p, pts[k].first));
        return v;
    };
    std::vector<Rational> data_diff;
    for (const auto& p : primes)
        for (size_t k = 0; k < pairs; ++k) {
            auto exp_of = [&](const FactoredInt& f) {
                auto it = f.factors.find(p);
                return it == f.factors.end() ? 0L : static_cast<long>(it->second);
            };
            data_diff.emplace_back(exp_of(pts[k + 1].second) - exp_of(pts[k].second));
        }

    std::vector<std::vector<Rational>> tmpl_diff;
    tmpl_diff.reserve(templates.size());
    for (const auto& t : templates) tmpl_diff.push_back(diff_vector(t));

    std::vector<BlockFit> fits;
    std::set<std::string> seen;

    auto try_subset = [&](const std::vector<size_t>& subset) {
        const size_t k = subset.size();
        std::vector<std::vector<Rational>> m(data_diff.size(), std::vector<Rational>(k));
        for (size_t row = 0; row < data_diff.size(); ++row)
            for (size_t col = 0; col < k; ++col) m[row][col] = tmpl_diff[subset[col]][row];
        auto sol = solve_exact(std::move(m), data_diff);
        if (!sol) return;
        BlockFit fit;
        for (size_t col = 0; col < k; ++col) {
            const Rational& e = (*sol)[col];
            if (e.get_den() != 1) return;
            long ei = e.get_num().get_si();
            if (ei == 0 || std::abs(ei) > bounds.exponent_max) return;
            BlockTemplate t = templates[subset[col]];
            t.exponent = static_cast<int>(ei);
            fit.terms.push_back(t);
        }
        // pin the constant from the first point, then verify everything exactly
        fit.constant = 1;
        Rational v0 = fit.value(pts.front().first);
        if (v0 == 0) return;
        fit.constant = Rational(pts.front().second.reconstruct()) / v0;
        fit.constant.canonicalize();
        for (const auto& [c, f] : pts)
            if (fit.value(c) != Rational(f.reconstruct())) return;
        if (seen.insert(fit.to_string()).second) fits.push_back(std::move(fit));
    };

    std::vector<size_t> subset;
    auto recurse = [&](auto&& self, size_t start, int remaining) -> void {
        if (!subset.empty()) try_subset(subset);
        if (remaining == 0) return;
        for (size_t t = start; t < templates.size(); ++t) {
            subset.push_back(t);
            self(self, t + 1, remaining - 1);
            subset.pop_back();
        }
    };
    recurse(recurse, 0, max_terms);

    // constant-only data: zero templates, constant candidate
    {
        BlockFit fit;
        fit.constant = Rational(pts.front().second.reconstruct());
        bool ok = true;
        for (const auto& [c, f] : pts)
            if (Rational(f.reconstruct()) != fit.constant) {
                ok = false;
                break;
            }
        if (ok && seen.insert(fit.to_string()).second) fits.insert(fits.begin(), fit);
    }

    std::stable_sort(fits.begin(), fits.end(), [](const BlockFit& x, const BlockFit& y) {
        return x.terms.size() < y.terms.size();
    });
    return fits;
}

} // namespace ccf
