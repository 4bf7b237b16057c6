#include "ccf/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace ccf {

std::string GLimit::to_string() const {
    std::ostringstream out;
    out << "(" << alpha.get_str() << ", " << beta.get_str() << ", " << gamma.get_str() << ")";
    return out.str();
}

GLimit normalize(const BigInt& alpha, const BigInt& beta, const BigInt& gamma) {
    if (alpha == 0 && beta == 0 && gamma == 0)
        throw std::invalid_argument("normalize: zero triple");
    BigInt g = gcd(gcd(alpha, beta), gamma);
    GLimit t{alpha / g, beta / g, gamma / g};
    const BigInt* lead = &t.gamma;
    if (*lead == 0) lead = &t.beta;
    if (*lead == 0) lead = &t.alpha;
    if (*lead < 0) {
        t.alpha = -t.alpha;
        t.beta = -t.beta;
        t.gamma = -t.gamma;
    }
    return t;
}

namespace {

struct GramSchmidt {
    std::vector<std::vector<Rational>> mu; // mu[i][j], j < i
    std::vector<Rational> norm;            // |b_i*|^2
};

Rational dot(const std::vector<BigInt>& a, const std::vector<Rational>& b) {
    Rational r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += Rational(a[i]) * b[i];
    return r;
}

GramSchmidt gso(const LatticeBasis& basis) {
    const size_t n = basis.size();
    const size_t dim = basis[0].size();
    GramSchmidt g;
    g.mu.assign(n, std::vector<Rational>(n, Rational(0)));
    g.norm.assign(n, Rational(0));
    std::vector<std::vector<Rational>> star(n, std::vector<Rational>(dim, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t d = 0; d < dim; ++d) star[i][d] = Rational(basis[i][d]);
        for (size_t j = 0; j < i; ++j) {
            if (g.norm[j] == 0) throw degenerate_basis("lll: dependent rows");
            Rational m = dot(basis[i], star[j]) / g.norm[j];
            g.mu[i][j] = m;
            for (size_t d = 0; d < dim; ++d) star[i][d] -= m * star[j][d];
        }
        for (size_t d = 0; d < dim; ++d) g.norm[i] += star[i][d] * star[i][d];
        if (g.norm[i] == 0) throw degenerate_basis("lll: dependent rows");
    }
    return g;
}

BigInt round_rational(const Rational& q) {
    // nearest integer, ties toward +inf
    Rational shifted = q + make_rational(1, 2);
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
    return r;
}

} // namespace

LatticeBasis lll(LatticeBasis basis, const Rational& delta) {
    if (basis.empty()) return basis;
    if (delta <= make_rational(1, 4) || delta >= 1)
        throw std::invalid_argument("lll: delta must lie in (1/4, 1)");
    const size_t n = basis.size();
    for (const auto& row : basis)
        if (row.size() != basis[0].size())
            throw std::invalid_argument("lll: ragged basis");

    size_t k = 1;
    while (k < n) {
        GramSchmidt g = gso(basis);
        // size-reduce row k
        for (size_t j = k; j-- > 0;) {
            Rational m = g.mu[k][j];
            if (::abs(m.get_num()) * 2 > m.get_den()) {
                BigInt r = round_rational(m);
                for (size_t d = 0; d < basis[k].size(); ++d) basis[k][d] -= r * basis[j][d];
                g = gso(basis);
            }
        }
        Rational lhs = g.norm[k];
        Rational rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return basis;
}

bool is_lll_reduced(const LatticeBasis& basis, const Rational& delta) {
    if (basis.size() < 2) return true;
    GramSchmidt g = gso(basis);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (::abs(g.mu[i][j].get_num()) * 2 > g.mu[i][j].get_den()) return false;
    for (size_t k = 1; k < basis.size(); ++k) {
        Rational rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm[k - 1];
        if (g.norm[k] < rhs) return false;
    }
    return true;
}

std::optional<GLimit> find_g_relation(const HPReal& q, const HPReal& g, int max_coeff_digits) {
    if (max_coeff_digits < 1)
        throw std::invalid_argument("find_g_relation: max_coeff_digits must be >= 1");
    const int prec = std::min(q.precision_digits(), g.precision_digits());
    if (prec < 3 * max_coeff_digits + 20)
        throw std::invalid_argument("find_g_relation: need precision >= 3*max_coeff_digits + 20");

    // tolerance 10^-(prec-20) used both for the q ~ 0 test and verification
    HPReal tol(prec);
    mpfr_set_ui(tol.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(tol.raw(), tol.raw(), -(prec - 20), MPFR_RNDN);

    if (mpfr_cmpabs(q.raw(), tol.raw()) < 0) return GLimit{0, 0, 1};

    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(prec - 10));
    HPReal s = HPReal::from_int(scale, prec);

    LatticeBasis basis(3, std::vector<BigInt>(4, BigInt(0)));
    basis[0][0] = 1;
    basis[0][3] = scale;
    basis[1][1] = 1;
    basis[1][3] = (s * q).round();
    basis[2][2] = 1;
    basis[2][3] = (s * q * g).round();

    LatticeBasis reduced = lll(std::move(basis));

    BigInt coeff_bound;
    mpz_ui_pow_ui(coeff_bound.get_mpz_t(), 10, static_cast<unsigned long>(max_coeff_digits));

    for (const auto& row : reduced) {
        const BigInt& m1 = row[0];
        const BigInt& m2 = row[1];
        const BigInt& m3 = row[2];
        if (m1 == 0 && m2 == 0 && m3 == 0) continue;
        if (m2 == 0 && m3 == 0) continue; // beta + gamma*G would vanish
        if (::abs(m1) >= coeff_bound || ::abs(m2) >= coeff_bound || ::abs(m3) >= coeff_bound)
            continue;
        GLimit t = normalize(m1, -m2, -m3);
        HPReal den = HPReal::from_int(t.beta, prec) + HPReal::from_int(t.gamma, prec) * g;
        if (den.is_zero()) continue;
        HPReal reconstructed = HPReal::from_int(t.alpha, prec) / den;
        HPReal resid = (q - reconstructed).abs();
        if (mpfr_cmp(resid.raw(), tol.raw()) < 0) return t;
    }
    return std::nullopt;
}

int verify_relation(const GLimit& t, const HPReal& q, const HPReal& g) {
    const int prec = std::min(q.precision_digits(), g.precision_digits());
    HPReal den = HPReal::from_int(t.beta, prec) + HPReal::from_int(t.gamma, prec) * g;
    HPReal tiny(prec);
    mpfr_set_ui(tiny.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(tiny.raw(), tiny.raw(), -(prec - 10), MPFR_RNDN);
    if (mpfr_cmpabs(den.raw(), tiny.raw()) < 0)
        throw std::invalid_argument("verify_relation: beta + gamma*G is numerically zero");
    return digits_agree(q, HPReal::from_int(t.alpha, prec) / den);
}

} // namespace ccf
