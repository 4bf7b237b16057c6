#include "ccf/families.hpp"

#include <algorithm>

#include "ccf/kappa.hpp"

namespace ccf {

std::array<BigInt, 3> FamilySpec::offsets_sorted() const {
    std::array<BigInt, 3> o{tau, eta, mu};
    std::sort(o.begin(), o.end());
    return o;
}

bool FamilySpec::same_cf(const FamilySpec& o) const {
    return delta == o.delta && epsilon == o.epsilon && offsets_sorted() == o.offsets_sorted();
}

CFSpec family_cf(const FamilySpec& spec) {
    PolyInt a{spec.epsilon, spec.delta, BigInt(3)};
    std::vector<PolyInt> factors{
        PolyInt{0, 1},
        PolyInt{spec.tau, 1},
        PolyInt{spec.eta, 1},
        PolyInt{spec.mu, 1},
    };
    return CFSpec::make(std::move(a), BigInt(-2), std::move(factors));
}

CFSpec ij_family_2i(long two_i, long j, long mu) {
    if (two_i < 0 || j < 0) throw std::invalid_argument("ij_family: need i >= 0, j >= 0");
    // a_n = j(2i-j+2) + (4i+3)n + 3n^2
    PolyInt a{BigInt(j) * (two_i - j + 2), BigInt(2 * two_i + 3), BigInt(3)};
    std::vector<PolyInt> factors{
        PolyInt{0, 1},
        PolyInt{BigInt(j - 1), 1},
        PolyInt{BigInt(two_i - j + 1), 1},
        PolyInt{BigInt(mu), 1},
    };
    return CFSpec::make(std::move(a), BigInt(-2), std::move(factors));
}

CFSpec ij_family(long i, long j, long mu) { return ij_family_2i(2 * i, j, mu); }

std::vector<GeneratorEntry> enumerate_generator(long l_bound, long mu, bool half_steps) {
    if (l_bound < 3) throw std::invalid_argument("enumerate_generator: l_bound must be >= 3");
    std::vector<GeneratorEntry> out;
    long step = half_steps ? 1 : 2;
    for (long two_i = 6; two_i <= 2 * l_bound; two_i += step) {
        long j_max = two_i / 4 + 1; // floor(i/2) + 1
        for (long j = 0; j <= j_max; ++j)
            out.push_back({two_i, j, ij_family_2i(two_i, j, mu)});
    }
    return out;
}

FamilySpec FamilyTemplate::instantiate(long i, long mu) const {
    FamilySpec s;
    s.delta = delta_slope * i + delta_offset;
    s.eta = eta;
    s.tau = tau_slope * i + tau_offset;
    s.epsilon = (s.eta + 1) * (s.tau + 1);
    s.mu = mu;
    return s;
}

std::vector<FamilyTemplate> family_catalog() {
    return {
        {4, 7, 0, 2, 2},
        {4, 11, 2, 2, 2},
        {4, 19, 4, 4, 4},
        {4, 27, 6, 2, 6},
        {4, 35, 8, 2, 8},
    };
}

std::vector<SporadicEntry> sporadic_catalog() {
    auto spec = [](long d, long e, long t, long h, long m) {
        return FamilySpec{d, e, t, h, m};
    };
    auto triple = [](long a, long b, long g) { return GLimit{a, b, g}; };
    std::vector<SporadicEntry> out{
        {spec(9, 7, 1, 1, 1), triple(1, 2, -2)},
        {spec(13, 13, 1, 1, 3), triple(6, 17, -18)},
        {spec(15, 19, 2, 2, 2), triple(8, -49, 54)},
        {spec(17, 19, 1, 1, 5), triple(120, 419, -450)},
        {spec(17, 23, 1, 3, 3), triple(12, 83, -90)},
        {spec(19, 29, 2, 2, 4), triple(32, -411, 450)},
        {spec(21, 33, 1, 3, 5), triple(240, 2893, -3150)},
    };
    // convergence examples with triples left to discover
    const long rows[][5] = {
        {23, 39, 2, 2, 6}, {23, 43, 2, 4, 4}, {25, 31, 1, 1, 9},  {25, 43, 1, 3, 7},
        {25, 47, 1, 5, 5}, {25, 51, 3, 3, 5}, {21, 25, 1, 1, 7},  {21, 37, 3, 3, 3},
        {27, 57, 2, 4, 6}, {27, 61, 4, 4, 4}, {29, 37, 1, 1, 11}, {29, 53, 1, 3, 9},
        {31, 59, 2, 2, 10}, {33, 43, 1, 1, 13}, {37, 49, 1, 1, 15},
    };
    for (const auto& r : rows) out.push_back({spec(r[0], r[1], r[2], r[3], r[4]), std::nullopt});
    return out;
}

std::vector<RatioIdentity> ratio_identities() {
    const PolyInt one = PolyInt::constant(1);
    std::vector<RatioIdentity> out;
    // 2^(2c+2) g = 3 a (2c-5) C_{c-1}
    out.push_back({15, 15, 2, 4, 2, 3, one, PolyInt::linear(2, -5), one});
    // 2^(2c+3) g = 5 a (2c-7) C_{c-1}
    out.push_back({19, 21, 2, 6, 3, 5, one, PolyInt::linear(2, -7), one});
    // 2^(2c+4) (2c-3) g = 9 a (2c-7)(2c-5) C_{c-1}
    out.push_back({19, 25, 4, 4, 4, 9, PolyInt::linear(2, -3), PolyInt::linear(2, -7),
                   PolyInt::linear(2, -5)});
    // 2^(2c+5) (2c-3) g = 15 a (2c-7)(2c-9) C_{c-1}
    out.push_back({23, 35, 4, 6, 5, 15, PolyInt::linear(2, -3), PolyInt::linear(2, -7),
                   PolyInt::linear(2, -9)});
    return out;
}

IdentityCheck check_ratio_identity(const RatioIdentity& row, long c, const GLimit& triple) {
    BigInt cc(c);
    BigInt lhs_extra = row.lhs_extra.eval(cc);
    BigInt rhs1 = row.rhs1.eval(cc);
    BigInt rhs2 = row.rhs2.eval(cc);
    if (lhs_extra == 0 || rhs1 == 0 || rhs2 == 0) return IdentityCheck::degenerate;

    BigInt pow2;
    long e = 2 * c + row.pow2_offset;
    if (e < 0) return IdentityCheck::degenerate;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(e));

    BigInt lhs = pow2 * lhs_extra * triple.gamma;
    BigInt rhs = BigInt(row.k) * rhs1 * rhs2 * catalan_number(c - 1) * triple.alpha;
    if (lhs == rhs) return IdentityCheck::holds;
    if (lhs == -rhs) return IdentityCheck::holds_negated;
    return IdentityCheck::fails;
}

std::vector<std::optional<Discovery>> discover_family_column(const FamilySpec& base, long mu_max,
                                                             const DiscoveryConfig& config) {
    std::vector<std::optional<Discovery>> out;
    for (long mu = 0; mu <= mu_max; ++mu) {
        FamilySpec s = base;
        s.mu = mu;
        try {
            out.push_back(discover_limit(family_cf(s), config));
        } catch (const numerical_breakdown&) {
            out.push_back(std::nullopt);
        }
    }
    return out;
}

Rational no_g_limit(int variant, long i) {
    switch (variant) {
        case 1: return Rational(15);
        case 2: return make_rational(10 * i + 505, 33);
        case 3: return make_rational(25 * (421 + 40 * i), 651 + 16 * i);
        case 4: return make_rational(25 * (401 + 40 * i), 643 + 16 * i);
        case 5:
            if (i == 2) return Rational(12);
            if (i == 3) return Rational(10);
            if (i >= 4) return Rational(0);
            throw std::invalid_argument("no_g_limit: variant 5 defined for j >= 2");
        default: throw std::invalid_argument("no_g_limit: unknown variant");
    }
}

CFSpec no_g_cf(int variant, long i) {
    // a_n = 3n^2 + 15n + 15 (the "delta = eta = 15" reading), b_n = -2n(n+4) phi(n)
    PolyInt a{BigInt(15), BigInt(15), BigInt(3)};
    std::vector<PolyInt> factors{PolyInt{0, 1}, PolyInt{4, 1}};
    BigInt scale = -2;
    switch (variant) {
        case 1:
            factors.push_back(PolyInt::linear(1, -1));
            factors.push_back(PolyInt::linear(1, i));
            break;
        case 2:
            factors.push_back(PolyInt::linear(1, -2));
            factors.push_back(PolyInt::linear(1, i));
            break;
        case 3:
            factors.push_back(PolyInt::linear(1, -3));
            factors.push_back(PolyInt::linear(1, 2 * i + 1));
            break;
        case 4:
            factors.push_back(PolyInt::linear(1, -3));
            factors.push_back(PolyInt::linear(1, 2 * i));
            break;
        case 5:
            // (1 + n/2)(2n + 2j - 1): fold the half into the scale
            scale = -1;
            factors.push_back(PolyInt{2, 1});
            factors.push_back(PolyInt::linear(2, 2 * i - 1));
            break;
        default: throw std::invalid_argument("no_g_cf: unknown variant");
    }
    return CFSpec::make(std::move(a), std::move(scale), std::move(factors));
}

} // namespace ccf
