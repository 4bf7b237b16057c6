#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <filesystem>
#include <optional>
#include <string>

#include "ccf/errors.hpp"

namespace ccf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Reduced rational with positive denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Floating real carrying an explicit working precision in decimal digits.
/// Arithmetic between two values works at the smaller of the two precisions;
/// equality is never tested exactly, use digits_agree.
class HPReal {
public:
    explicit HPReal(int digits = 250);
    HPReal(const HPReal& o);
    HPReal(HPReal&& o) noexcept;
    HPReal& operator=(const HPReal& o);
    HPReal& operator=(HPReal&& o) noexcept;
    ~HPReal();

    static HPReal from_int(const BigInt& v, int digits);
    static HPReal from_rational(const Rational& v, int digits);
    static HPReal from_string(const std::string& decimal, int digits);

    int precision_digits() const { return digits_; }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal rendering with the given number of significant digits
    /// (defaults to the full working precision).
    std::string to_string(int digits = 0) const;

    HPReal operator-() const;
    HPReal operator+(const HPReal& o) const;
    HPReal operator-(const HPReal& o) const;
    HPReal operator*(const HPReal& o) const;
    HPReal operator/(const HPReal& o) const;
    HPReal abs() const;

    /// Nearest integer.
    BigInt round() const;

    static int bits_for_digits(int digits);

private:
    mpfr_t v_;
    int digits_;
};

/// Count of leading agreeing significant decimal digits; 0 if signs differ.
int digits_agree(const HPReal& a, const HPReal& b);

/// Best rational p/q with q <= den_bound via the continued-fraction expansion
/// of x. Empty if the residual exceeds 10^(-precision/2).
std::optional<Rational> rational_reconstruct(const HPReal& x, const BigInt& den_bound);

/// Cache directory used by catalan() and the bootstrapped-parameter store.
/// Resolution order: explicit set_cache_dir, CCF_CACHE_DIR, ./.ccf-cache.
void set_cache_dir(const std::filesystem::path& dir);
std::filesystem::path cache_dir();

int catalan_digit_cap();
void set_catalan_digit_cap(int cap);

/// Catalan constant to at least `digits` correct decimal digits.
/// Two independent computations must agree before the result is cached.
HPReal catalan(int digits);

} // namespace ccf
