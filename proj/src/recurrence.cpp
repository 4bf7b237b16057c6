#include <sstream>

#include "ccf/challenge.hpp"

namespace ccf {

std::string RecurrenceGuess::to_string() const {
    std::ostringstream out;
    for (int i = order; i >= 0; --i) {
        if (i < order) out << " + ";
        out << "(" << coeffs[static_cast<size_t>(i)].to_string("c") << ")*v[c-" << (order - i)
            << "]";
    }
    out << " = 0";
    return out.str();
}

namespace {

// One nontrivial kernel vector of the homogeneous system, or empty.
std::optional<std::vector<Rational>> kernel_vector(std::vector<std::vector<Rational>> m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    std::vector<long> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rational inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }
    long free_col = -1;
    for (size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) {
            free_col = static_cast<long>(c);
            break;
        }
    if (free_col < 0) return std::nullopt; // trivial kernel only
    std::vector<Rational> v(cols, Rational(0));
    v[static_cast<size_t>(free_col)] = 1;
    for (size_t c = 0; c < cols; ++c) {
        long p = pivot_of_col[c];
        if (p >= 0) v[c] = -m[static_cast<size_t>(p)][static_cast<size_t>(free_col)];
    }
    return v;
}

} // namespace

std::optional<RecurrenceGuess> guess_p_recurrence(const std::vector<Rational>& values, long c0,
                                                  int order, int max_degree) {
    if (order < 1 || max_degree < 0)
        throw std::invalid_argument("guess_p_recurrence: need order >= 1, degree >= 0");
    const long unknowns = static_cast<long>(order + 1) * (max_degree + 1);
    const long needed = unknowns + order + 3; // over-determination margin
    if (static_cast<long>(values.size()) < needed)
        throw insufficient_data("guess_p_recurrence: need at least " + std::to_string(needed) +
                                " values, got " + std::to_string(values.size()));

    // unknown (i, j): coefficient of c^j in p_i; equation per c with full history
    const size_t m = values.size();
    std::vector<std::vector<Rational>> mat;
    for (size_t k = static_cast<size_t>(order); k < m; ++k) {
        long c = c0 + static_cast<long>(k);
        std::vector<Rational> row;
        row.reserve(static_cast<size_t>(unknowns));
        for (int i = 0; i <= order; ++i) {
            const Rational& v = values[k - static_cast<size_t>(order) + static_cast<size_t>(i)];
            Rational cpow = 1;
            for (int j = 0; j <= max_degree; ++j) {
                row.push_back(v * cpow);
                cpow *= c;
            }
        }
        mat.push_back(std::move(row));
    }

    auto kv = kernel_vector(std::move(mat));
    if (!kv) return std::nullopt;

    // clear denominators, remove integer content
    BigInt lcm = 1, content = 0;
    for (const auto& q : *kv) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<BigInt> ints;
    ints.reserve(kv->size());
    for (const auto& q : *kv) {
        Rational scaled = q * lcm;
        ints.push_back(scaled.get_num());
        content = gcd(content, ints.back());
    }
    for (auto& z : ints) z /= content;

    RecurrenceGuess guess;
    guess.order = order;
    guess.c_first = c0 + order;
    guess.c_last = c0 + static_cast<long>(m) - 1;
    size_t idx = 0;
    for (int i = 0; i <= order; ++i) {
        std::vector<BigInt> coeffs(ints.begin() + static_cast<long>(idx),
                                   ints.begin() + static_cast<long>(idx + max_degree + 1));
        guess.coeffs.emplace_back(std::move(coeffs));
        idx += static_cast<size_t>(max_degree) + 1;
    }
    // sign convention: the coefficient of v_c reads like a forward recursion
    const PolyInt& top = guess.coeffs[static_cast<size_t>(order)];
    if (!top.is_zero() && top.coefficient(top.degree()) > 0)
        for (auto& p : guess.coeffs) p = p * BigInt(-1);

    // recheck every equation with the content-free integer coefficients
    for (size_t k = static_cast<size_t>(order); k < m; ++k) {
        long c = c0 + static_cast<long>(k);
        Rational acc = 0;
        for (int i = 0; i <= order; ++i)
            acc += Rational(guess.coeffs[static_cast<size_t>(i)].eval(BigInt(c))) *
                   values[k - static_cast<size_t>(order) + static_cast<size_t>(i)];
        if (acc != 0) return std::nullopt;
    }
    return guess;
}

} // namespace ccf
