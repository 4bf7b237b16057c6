#pragma once

#include <array>
#include <utility>

#include "ccf/cf.hpp"
#include "ccf/lattice.hpp"
#include "ccf/numerics.hpp"
#include "ccf/polynomial.hpp"

namespace ccf {

/// Per-kappa closed-form parameters:
///   Q_{c,k} = sigma_num (2c)! / (sigma_den ((2c-1)!!)^2 G + prod(2c-2t+1) Delta_{c-1,k})
/// with the kappa=0 sign exception Q_{c,0} = (2c)!/(2((2c-1)!!)^2 G - Delta_{c-1,0}).
/// Delta seed on c in {0,1} is seed_a*c + seed_b.
struct KappaParams {
    int kappa = 0;
    BigInt sigma_num, sigma_den;
    Rational seed_a, seed_b;
};

/// n!! for odd n >= -1 ((-1)!! = 1 as the empty product).
BigInt semifactorial(long n);

BigInt catalan_number(long n);

/// Conjectured sigma_num/sigma_den ratio 4^(k-1) / ((2k-1) C_{k-1}), k >= 1.
Rational rho(int kappa);

/// Built-in table for kappa 0..7; beyond that, bootstrapped parameters
/// (registered in-process or persisted under the cache directory).
KappaParams kappa_params(int kappa);

/// Make bootstrapped parameters available; optionally persist them under
/// cache_dir()/kappa_<k>.params.
void register_params(const KappaParams& params, bool persist = false);

/// Generic recursion pair (p, q) with Delta_c = p(c) Delta_{c-1} + q(c) Delta_{c-2}.
std::pair<PolyInt, PolyInt> delta_recursion_polys(int kappa);

/// Delta_{c,kappa}; seed for c < 2, generic recursion beyond. Memoized.
Rational delta(int kappa, long c);

/// Compact kappa=0 form: Delta_0 = 1, Delta_c = (2c)! + (2c+1)^2 Delta_{c-1}.
BigInt delta0_compact(long c);

long delta_c_max();
void set_delta_c_max(long c_max);

struct QClosed {
    std::array<BigInt, 3> raw; // (alpha, beta, gamma) before normalization
    GLimit canonical;
};

QClosed q_closed(int kappa, long c);

/// alpha/(beta + gamma*G) of the closed form, rendered numerically.
HPReal q_closed_numeric(int kappa, long c, int digits);

/// Step 1-3 bootstrap: from numeric limits at c=1,2 recover
/// (sigma_num, sigma_den, A, B), rescaled to the minimal common-integer tuple.
KappaParams bootstrap(int kappa, const HPReal& q1, const HPReal& q2, const HPReal& g);

} // namespace ccf
