#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "ccf/cf.hpp"
#include "ccf/families.hpp"
#include "ccf/numerics.hpp"

using namespace ccf;

namespace {

struct CacheSetup {
    CacheSetup() {
        set_cache_dir(std::filesystem::temp_directory_path() / "ccf-test-cache");
    }
} cache_setup;

} // namespace

TEST_CASE("kappa family coefficients") {
    CFSpec cf = kappa_cf(1, 2);
    CHECK(cf.a0 == 3);               // 2k+1
    CHECK(cf.eval_a(1) == 13);       // 3 + 7 + 3
    CHECK(cf.eval_b(1) == -2 * 3 * 3); // -2*1*(1+2)*(1+2)
    CHECK(cf.b_expanded().degree() == 4);
}

TEST_CASE("backward fold reproduces reference limits") {
    HPReal q00 = eval_backward(kappa_cf(0, 0), 4000, 40);
    HPReal ref00 = HPReal::from_string("0.54587203185195305072707973666694616", 40);
    CHECK(digits_agree(q00, ref00) >= 30);

    HPReal q11 = eval_backward(kappa_cf(1, 1), 4000, 40);
    HPReal ref11 = HPReal::from_string("1.4124636984291615312822364125195285", 40);
    CHECK(digits_agree(q11, ref11) >= 30);
}

TEST_CASE("depth-zero convergent is the leading term") {
    CHECK(convergent_exact(kappa_cf(0, 0), 0) == Rational(1));
    CHECK(convergent_exact(kappa_cf(1, 1), 0) == Rational(3));
}

TEST_CASE("exact convergents and the float fold agree") {
    CFSpec cf = kappa_cf(0, 1);
    for (int depth : {500, 1000, 2000}) {
        Rational conv = convergent_exact(cf, depth);
        HPReal q = eval_backward(cf, depth, 250);
        HPReal diff = (q - HPReal::from_rational(conv, 250)).abs();
        // |q - convergent| below 10^-200
        mpfr_t tiny;
        mpfr_init2(tiny, 64);
        mpfr_set_si(tiny, 10, MPFR_RNDN);
        mpfr_pow_si(tiny, tiny, -200, MPFR_RNDN);
        CHECK(mpfr_cmp(diff.raw(), tiny) < 0);
        mpfr_clear(tiny);
    }
}

TEST_CASE("generator cell (2,2) with mu=3 converges to an integer") {
    HPReal q = eval_backward(ij_family(2, 2, 3), 4000, 40);
    CHECK(digits_agree(q, HPReal::from_int(6, 40)) >= 20);
}

TEST_CASE("convergence estimate reports substantial agreement") {
    CHECK(estimate_converged_digits(kappa_cf(0, 0), 6000, 300) >= 80);
}

TEST_CASE("successive limits approach spacing 2") {
    HPReal gap = successive_limit_gap(0, 50, 20000, 120);
    double g = gap.to_double();
    CHECK(g < 0.0);
    CHECK(std::abs(g) < 5e-5);
    CHECK(std::abs(g) > 1e-6);
}

TEST_CASE("evaluation is deterministic") {
    HPReal a = eval_backward(kappa_cf(2, 3), 1500, 80);
    HPReal b = eval_backward(kappa_cf(2, 3), 1500, 80);
    CHECK(digits_agree(a, b) >= 80);
}

TEST_CASE("spec factors multiply out") {
    CFSpec cf = kappa_cf(2, 5);
    for (long n = 1; n <= 10; ++n)
        CHECK(cf.eval_b(n) == cf.b_expanded().eval(BigInt(n)));
}
