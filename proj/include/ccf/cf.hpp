#pragma once

#include <vector>

#include "ccf/numerics.hpp"
#include "ccf/polynomial.hpp"

namespace ccf {

/// Generalized continued fraction a0 + b1/(a1 + b2/(a2 + ...)).
/// b is kept in factored product form (scale * prod of polynomials) so that
/// specs like -2n^2(n+2k)(n+c) evaluate exactly without expansion.
struct CFSpec {
    PolyInt a;
    BigInt b_scale = 1;
    std::vector<PolyInt> b_factors;
    BigInt a0;

    static CFSpec make(PolyInt a, BigInt b_scale, std::vector<PolyInt> b_factors);

    BigInt eval_a(long n) const { return a.eval(BigInt(n)); }
    BigInt eval_b(long n) const;
    /// b as a single expanded polynomial.
    PolyInt b_expanded() const;
};

/// The two-parameter family: a = 3n^2+(3+4k)n+2k+1, b = -2n^2(n+2k)(n+c).
CFSpec kappa_cf(int kappa, int c);

/// Backward fold at fixed working precision.
HPReal eval_backward(const CFSpec& cf, int depth, int digits);

/// Exact depth-th convergent via h_n = a(n) h_{n-1} + b(n) h_{n-2}.
Rational convergent_exact(const CFSpec& cf, int depth);

/// digits_agree(depth, 2*depth) minus 2 guard digits, floored at 0.
int estimate_converged_digits(const CFSpec& cf, int depth, int digits);

/// Q_{c,kappa} - Q_{c-1,kappa} - 2, evaluated numerically.
HPReal successive_limit_gap(int kappa, int c, int depth, int digits);

} // namespace ccf
