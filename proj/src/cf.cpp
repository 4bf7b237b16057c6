#include "ccf/cf.hpp"

namespace ccf {

CFSpec CFSpec::make(PolyInt a, BigInt b_scale, std::vector<PolyInt> b_factors) {
    CFSpec cf;
    cf.a0 = a.eval(BigInt(0));
    cf.a = std::move(a);
    cf.b_scale = std::move(b_scale);
    cf.b_factors = std::move(b_factors);
    return cf;
}

BigInt CFSpec::eval_b(long n) const {
    BigInt r = b_scale;
    BigInt x(n);
    for (const auto& f : b_factors) {
        if (r == 0) break;
        r *= f.eval(x);
    }
    return r;
}

PolyInt CFSpec::b_expanded() const {
    PolyInt p = PolyInt::constant(b_scale);
    for (const auto& f : b_factors) p = p * f;
    return p;
}

CFSpec kappa_cf(int kappa, int c) {
    if (kappa < 0 || c < 0) throw std::invalid_argument("kappa_cf: kappa and c must be >= 0");
    PolyInt a{BigInt(2 * kappa + 1), BigInt(3 + 4 * kappa), BigInt(3)};
    std::vector<PolyInt> factors{
        PolyInt{0, 1}, PolyInt{0, 1},               // n^2
        PolyInt::linear(1, 2 * kappa),              // n + 2k
        PolyInt::linear(1, c),                      // n + c
    };
    return CFSpec::make(std::move(a), BigInt(-2), std::move(factors));
}

HPReal eval_backward(const CFSpec& cf, int depth, int digits) {
    if (depth < 1) throw std::invalid_argument("eval_backward: depth must be >= 1");
    if (digits < 20) throw std::invalid_argument("eval_backward: precision must be >= 20 digits");

    mpfr_prec_t bits = HPReal::bits_for_digits(digits);
    mpfr_t x, den, tiny;
    mpfr_init2(x, bits);
    mpfr_init2(den, bits);
    mpfr_init2(tiny, bits);
    mpfr_set_ui(tiny, 10, MPFR_RNDN);
    mpfr_pow_si(tiny, tiny, -digits + 5, MPFR_RNDN);

    BigInt an = cf.eval_a(depth);
    BigInt bn = cf.eval_b(depth);
    if (an == 0) {
        mpfr_clears(x, den, tiny, nullptr);
        throw numerical_breakdown(depth, "eval_backward: a(depth) = 0");
    }
    mpfr_set_z(x, bn.get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(den, an.get_mpz_t(), MPFR_RNDN);
    mpfr_div(x, x, den, MPFR_RNDN);

    for (int n = depth - 1; n >= 1; --n) {
        an = cf.eval_a(n);
        mpfr_set_z(den, an.get_mpz_t(), MPFR_RNDN);
        mpfr_add(den, den, x, MPFR_RNDN);
        mpfr_abs(x, den, MPFR_RNDN);
        if (mpfr_cmp(x, tiny) < 0) {
            mpfr_clears(x, den, tiny, nullptr);
            throw numerical_breakdown(n, "eval_backward: numerical breakdown at n=" +
                                             std::to_string(n));
        }
        bn = cf.eval_b(n);
        mpfr_set_z(x, bn.get_mpz_t(), MPFR_RNDN);
        mpfr_div(x, x, den, MPFR_RNDN);
    }

    HPReal result(digits);
    mpfr_set_z(result.raw(), cf.a0.get_mpz_t(), MPFR_RNDN);
    mpfr_add(result.raw(), result.raw(), x, MPFR_RNDN);
    mpfr_clears(x, den, tiny, nullptr);
    return result;
}

Rational convergent_exact(const CFSpec& cf, int depth) {
    if (depth < 0) throw std::invalid_argument("convergent_exact: depth must be >= 0");
    BigInt h_prev = 1, h = cf.a0;
    BigInt k_prev = 0, k = 1;
    for (int n = 1; n <= depth; ++n) {
        BigInt an = cf.eval_a(n);
        BigInt bn = cf.eval_b(n);
        BigInt h_next = an * h + bn * h_prev;
        BigInt k_next = an * k + bn * k_prev;
        h_prev = std::move(h);
        k_prev = std::move(k);
        h = std::move(h_next);
        k = std::move(k_next);
    }
    if (k == 0) throw degenerate_convergent("convergent_exact: zero denominator at depth " +
                                            std::to_string(depth));
    return make_rational(h, k);
}

int estimate_converged_digits(const CFSpec& cf, int depth, int digits) {
    if (depth < 2) throw std::invalid_argument("estimate_converged_digits: depth must be >= 2");
    HPReal v1 = eval_backward(cf, depth, digits);
    HPReal v2 = eval_backward(cf, 2 * depth, digits);
    return std::max(0, digits_agree(v1, v2) - 2);
}

HPReal successive_limit_gap(int kappa, int c, int depth, int digits) {
    if (c < 1) throw std::invalid_argument("successive_limit_gap: c must be >= 1");
    HPReal qa = eval_backward(kappa_cf(kappa, c), depth, digits);
    HPReal qb = eval_backward(kappa_cf(kappa, c - 1), depth, digits);
    HPReal two = HPReal::from_int(2, digits);
    return qa - qb - two;
}

} // namespace ccf
