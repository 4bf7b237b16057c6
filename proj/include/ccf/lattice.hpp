#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccf/numerics.hpp"

namespace ccf {

/// Canonical integer triple for Q = alpha/(beta + gamma*G):
/// gcd 1, first nonzero of (gamma, beta, alpha) positive.
struct GLimit {
    BigInt alpha, beta, gamma;

    bool operator==(const GLimit& o) const = default;
    std::string to_string() const;
};

GLimit normalize(const BigInt& alpha, const BigInt& beta, const BigInt& gamma);
inline GLimit normalize(const GLimit& t) { return normalize(t.alpha, t.beta, t.gamma); }

using LatticeBasis = std::vector<std::vector<BigInt>>;

/// Exact-arithmetic LLL reduction. Throws degenerate_basis on dependent rows.
LatticeBasis lll(LatticeBasis basis, const Rational& delta = make_rational(99, 100));

/// Size-reduction and Lovasz conditions, checked with exact rationals.
bool is_lll_reduced(const LatticeBasis& basis, const Rational& delta = make_rational(99, 100));

/// Integer relation alpha - beta*q - gamma*q*g = 0 via lattice reduction,
/// verified against |q - alpha/(beta + gamma*g)| < 10^-(precision-20).
/// Empty optional: no relation at this precision.
std::optional<GLimit> find_g_relation(const HPReal& q, const HPReal& g, int max_coeff_digits);

/// Agreement digits between q and alpha/(beta + gamma*g).
int verify_relation(const GLimit& t, const HPReal& q, const HPReal& g);

} // namespace ccf
