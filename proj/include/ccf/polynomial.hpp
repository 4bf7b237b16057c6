#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ccf/numerics.hpp"

namespace ccf {

/// Integer-coefficient polynomial, ascending degree, trailing zeros stripped.
class PolyInt {
public:
    PolyInt() = default;
    PolyInt(std::initializer_list<BigInt> coeffs);
    explicit PolyInt(std::vector<BigInt> coeffs);

    static PolyInt constant(const BigInt& c) { return PolyInt({c}); }
    /// a*x + b
    static PolyInt linear(const BigInt& a, const BigInt& b) { return PolyInt({b, a}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& coefficient(int i) const;

    BigInt eval(const BigInt& x) const;
    Rational eval(const Rational& x) const;

    PolyInt operator+(const PolyInt& o) const;
    PolyInt operator-(const PolyInt& o) const;
    PolyInt operator*(const PolyInt& o) const;
    PolyInt operator*(const BigInt& k) const;
    bool operator==(const PolyInt& o) const = default;

    std::string to_string(const std::string& var = "n") const;

private:
    void strip();
    std::vector<BigInt> coeffs_;
};

} // namespace ccf
