#include "ccf/polynomial.hpp"

#include <sstream>

namespace ccf {

PolyInt::PolyInt(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { strip(); }
PolyInt::PolyInt(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

void PolyInt::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& PolyInt::coefficient(int i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

BigInt PolyInt::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

Rational PolyInt::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

PolyInt PolyInt::operator+(const PolyInt& o) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return PolyInt(std::move(c));
}

PolyInt PolyInt::operator-(const PolyInt& o) const {
    std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return PolyInt(std::move(c));
}

PolyInt PolyInt::operator*(const PolyInt& o) const {
    if (is_zero() || o.is_zero()) return PolyInt();
    std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return PolyInt(std::move(c));
}

PolyInt PolyInt::operator*(const BigInt& k) const {
    std::vector<BigInt> c = coeffs_;
    for (auto& x : c) x *= k;
    return PolyInt(std::move(c));
}

std::string PolyInt::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coefficient(i);
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        BigInt a = ::abs(c);
        if (a != 1 || i == 0) out << a.get_str();
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

} // namespace ccf
