#include "ccf/numerics.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

namespace fs = std::filesystem;

namespace ccf {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

int HPReal::bits_for_digits(int digits) {
    // log2(10) = 3.3219..., plus guard bits.
    return static_cast<int>(std::ceil(digits * 3.3219280948873626)) + 64;
}

HPReal::HPReal(int digits) : digits_(digits) {
    if (digits < 10) throw std::invalid_argument("HPReal: precision must be >= 10 digits");
    mpfr_init2(v_, bits_for_digits(digits));
    mpfr_set_zero(v_, 1);
}

HPReal::HPReal(const HPReal& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

HPReal& HPReal::operator=(const HPReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        digits_ = o.digits_;
    }
    return *this;
}

HPReal& HPReal::operator=(HPReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        digits_ = o.digits_;
    }
    return *this;
}

HPReal::~HPReal() { mpfr_clear(v_); }

HPReal HPReal::from_int(const BigInt& v, int digits) {
    HPReal r(digits);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

HPReal HPReal::from_rational(const Rational& v, int digits) {
    HPReal r(digits);
    mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

HPReal HPReal::from_string(const std::string& decimal, int digits) {
    HPReal r(digits);
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("HPReal::from_string: unparsable value '" + decimal + "'");
    return r;
}

std::string HPReal::to_string(int digits) const {
    if (digits <= 0) digits = digits_;
    char* s = nullptr;
    // %.*Rg keeps significant-digit semantics.
    if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0)
        throw std::runtime_error("HPReal::to_string: mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

namespace {
int combined_digits(const HPReal& a, const HPReal& b) {
    return std::min(a.precision_digits(), b.precision_digits());
}
} // namespace

HPReal HPReal::operator-() const {
    HPReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator+(const HPReal& o) const {
    HPReal r(combined_digits(*this, o));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator-(const HPReal& o) const {
    HPReal r(combined_digits(*this, o));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator*(const HPReal& o) const {
    HPReal r(combined_digits(*this, o));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::operator/(const HPReal& o) const {
    HPReal r(combined_digits(*this, o));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

HPReal HPReal::abs() const {
    HPReal r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigInt HPReal::round() const {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(v_));
    mpfr_round(t, v_);
    BigInt r;
    mpfr_get_z(r.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return r;
}

int digits_agree(const HPReal& a, const HPReal& b) {
    if (!a.is_finite() || !b.is_finite())
        throw std::invalid_argument("digits_agree: non-finite input");
    int cap = std::min(a.precision_digits(), b.precision_digits());
    if (a.is_zero() && b.is_zero()) return cap;
    if (a.sign() * b.sign() < 0) return 0;

    mpfr_prec_t prec = std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
    mpfr_t diff, mag;
    mpfr_init2(diff, prec);
    mpfr_init2(mag, prec);
    mpfr_sub(diff, a.raw(), b.raw(), MPFR_RNDN);
    mpfr_abs(diff, diff, MPFR_RNDN);
    if (mpfr_zero_p(diff)) {
        mpfr_clears(diff, mag, nullptr);
        return cap;
    }
    mpfr_t aa, bb;
    mpfr_init2(aa, prec);
    mpfr_init2(bb, prec);
    mpfr_abs(aa, a.raw(), MPFR_RNDN);
    mpfr_abs(bb, b.raw(), MPFR_RNDN);
    mpfr_max(mag, aa, bb, MPFR_RNDN);
    mpfr_div(mag, mag, diff, MPFR_RNDN);
    mpfr_log10(mag, mag, MPFR_RNDN);
    mpfr_floor(mag, mag);
    long d = mpfr_get_si(mag, MPFR_RNDN);
    mpfr_clears(diff, mag, aa, bb, nullptr);
    if (d < 0) return 0;
    return static_cast<int>(std::min<long>(d, cap));
}

std::optional<Rational> rational_reconstruct(const HPReal& x, const BigInt& den_bound) {
    if (!x.is_finite()) throw std::invalid_argument("rational_reconstruct: non-finite input");
    if (den_bound < 1) throw std::invalid_argument("rational_reconstruct: bound must be >= 1");

    mpfr_prec_t prec = mpfr_get_prec(x.raw());
    mpfr_t t, fl;
    mpfr_init2(t, prec);
    mpfr_init2(fl, prec);
    mpfr_set(t, x.raw(), MPFR_RNDN);

    // Convergents of the continued-fraction expansion of x.
    BigInt p0 = 1, q0 = 0, p1, q1;
    {
        mpfr_floor(fl, t);
        BigInt a;
        mpfr_get_z(a.get_mpz_t(), fl, MPFR_RNDN);
        p1 = a;
        q1 = 1;
        mpfr_sub(t, t, fl, MPFR_RNDN);
    }
    Rational best = make_rational(p1, q1);
    for (int it = 0; it < 10000; ++it) {
        if (mpfr_zero_p(t)) break;
        mpfr_ui_div(t, 1, t, MPFR_RNDN);
        mpfr_floor(fl, t);
        BigInt a;
        mpfr_get_z(a.get_mpz_t(), fl, MPFR_RNDN);
        BigInt p2 = a * p1 + p0;
        BigInt q2 = a * q1 + q0;
        if (q2 > den_bound) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        best = make_rational(p1, q1);
        mpfr_sub(t, t, fl, MPFR_RNDN);
    }
    mpfr_clears(t, fl, nullptr);

    HPReal approx = HPReal::from_rational(best, x.precision_digits());
    HPReal resid = (x - approx).abs();
    HPReal tol(x.precision_digits());
    mpfr_set_ui(tol.raw(), 10, MPFR_RNDN);
    mpfr_pow_si(tol.raw(), tol.raw(), -(x.precision_digits() / 2), MPFR_RNDN);
    if (mpfr_cmp(resid.raw(), tol.raw()) > 0) return std::nullopt;
    return best;
}

// --- cache directory ------------------------------------------------------

namespace {
std::atomic<int> g_digit_cap{100000};

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

fs::path& cache_dir_override() {
    static fs::path dir;
    return dir;
}

fs::path resolve_cache_dir() {
    std::lock_guard lock(cache_mutex());
    if (!cache_dir_override().empty()) return cache_dir_override();
    if (const char* env = std::getenv("CCF_CACHE_DIR"); env && *env) return fs::path(env);
    return fs::path(".ccf-cache");
}

void atomic_write(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << content;
        if (!out) throw std::runtime_error("failed to write " + tmp.string());
    }
    fs::rename(tmp, path);
}
} // namespace

void set_cache_dir(const fs::path& dir) {
    std::lock_guard lock(cache_mutex());
    cache_dir_override() = dir;
}

fs::path cache_dir() { return resolve_cache_dir(); }

int catalan_digit_cap() { return g_digit_cap.load(); }
void set_catalan_digit_cap(int cap) { g_digit_cap.store(cap); }

// --- Catalan constant -----------------------------------------------------

namespace {

// G = 3/8 * sum_{n>=0} 1/(binom(2n,n) (2n+1)^2) + (pi/8) log(2 + sqrt(3)).
// Terms shrink by ~1/4 per step, so ~1.66 terms per decimal digit.
void catalan_binomial_series(mpfr_ptr out, mpfr_prec_t bits) {
    mpfr_t sum, term, tmp;
    mpfr_init2(sum, bits);
    mpfr_init2(term, bits);
    mpfr_init2(tmp, bits);
    mpfr_set_ui(term, 1, MPFR_RNDN);
    mpfr_set_ui(sum, 1, MPFR_RNDN);
    for (unsigned long n = 0;; ++n) {
        // t_{n+1} = t_n * (n+1)(2n+1) / (2 (2n+3)^2)
        mpfr_mul_ui(term, term, (n + 1) * (2 * n + 1), MPFR_RNDN);
        mpfr_div_ui(term, term, 2 * (2 * n + 3) * (2 * n + 3), MPFR_RNDN);
        mpfr_add(sum, sum, term, MPFR_RNDN);
        if (mpfr_get_exp(term) < -static_cast<long>(bits)) break;
    }
    mpfr_mul_ui(sum, sum, 3, MPFR_RNDN);
    mpfr_div_ui(sum, sum, 8, MPFR_RNDN);

    mpfr_t logpart, pi;
    mpfr_init2(logpart, bits);
    mpfr_init2(pi, bits);
    mpfr_sqrt_ui(logpart, 3, MPFR_RNDN);
    mpfr_add_ui(logpart, logpart, 2, MPFR_RNDN);
    mpfr_log(logpart, logpart, MPFR_RNDN);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul(logpart, logpart, pi, MPFR_RNDN);
    mpfr_div_ui(logpart, logpart, 8, MPFR_RNDN);

    mpfr_add(out, sum, logpart, MPFR_RNDN);
    mpfr_clears(sum, term, tmp, logpart, pi, nullptr);
}

std::optional<std::string> read_cached_digits(const fs::path& file, int digits) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string header, body;
    if (!std::getline(in, header)) return std::nullopt;
    if (!std::getline(in, body)) return std::nullopt;
    long count = 0;
    try {
        count = std::stol(header);
    } catch (...) {
        return std::nullopt;
    }
    if (count < digits) return std::nullopt;
    // body is "0.9159..." with `count` digits after the point
    if (body.rfind("0.", 0) != 0 || static_cast<long>(body.size()) < count + 2) return std::nullopt;
    for (size_t i = 2; i < body.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(body[i]))) return std::nullopt;
    return body;
}

std::string render_fixed(mpfr_srcptr v, int digits) {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rf", digits, v) < 0)
        throw std::runtime_error("catalan: render failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

HPReal compute_catalan(int digits) {
    for (int guard = 32; guard <= 256; guard *= 2) {
        mpfr_prec_t bits = HPReal::bits_for_digits(digits) + guard;
        mpfr_t m1, m2;
        mpfr_init2(m1, bits);
        mpfr_init2(m2, bits);
        catalan_binomial_series(m1, bits);
        mpfr_const_catalan(m2, MPFR_RNDN);

        HPReal a(digits), b(digits);
        mpfr_set(a.raw(), m1, MPFR_RNDN);
        mpfr_set(b.raw(), m2, MPFR_RNDN);
        mpfr_clears(m1, m2, nullptr);
        if (digits_agree(a, b) >= std::min(digits, a.precision_digits())) return a;
    }
    throw std::runtime_error("catalan: independent methods failed to agree");
}

} // namespace

HPReal catalan(int digits) {
    if (digits < 10) throw std::invalid_argument("catalan: digits must be >= 10");
    if (digits > catalan_digit_cap())
        throw std::runtime_error("catalan: " + std::to_string(digits) +
                                 " digits exceeds the configured cap of " +
                                 std::to_string(catalan_digit_cap()) +
                                 "; raise it with set_catalan_digit_cap if intentional");

    fs::path dir = cache_dir();
    fs::path file = dir / ("catalan_" + std::to_string(digits) + ".txt");

    if (auto body = read_cached_digits(file, digits))
        return HPReal::from_string(*body, digits);

    // Any larger cache entry serves smaller requests.
    std::error_code ec;
    for (fs::directory_iterator it(dir, ec), end; !ec && it != end; ++it) {
        const std::string name = it->path().filename().string();
        if (name.rfind("catalan_", 0) != 0 || it->path().extension() != ".txt") continue;
        if (auto body = read_cached_digits(it->path(), digits))
            return HPReal::from_string(body->substr(0, static_cast<size_t>(digits) + 2), digits);
    }

    HPReal g = compute_catalan(digits);
    std::string rendered = render_fixed(g.raw(), digits);
    atomic_write(file, std::to_string(digits) + "\n" + rendered + "\n");
    return g;
}

} // namespace ccf
