#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "ccf/cf.hpp"
#include "ccf/errors.hpp"
#include "ccf/kappa.hpp"

using namespace ccf;

namespace {

struct CacheSetup {
    CacheSetup() {
        set_cache_dir(std::filesystem::temp_directory_path() / "ccf-test-cache-kappa");
    }
} cache_setup;

} // namespace

TEST_CASE("semifactorial of odd arguments") {
    CHECK(semifactorial(-1) == 1);
    CHECK(semifactorial(1) == 1);
    CHECK(semifactorial(7) == 105);
    CHECK(semifactorial(9) == 945);
    CHECK_THROWS_AS(semifactorial(4), std::invalid_argument);
}

TEST_CASE("catalan numbers") {
    const long want[] = {1, 1, 2, 5, 14, 42, 132};
    for (long n = 0; n <= 6; ++n) CHECK(catalan_number(n) == want[n]);
}

TEST_CASE("built-in parameters") {
    auto p0 = kappa_params(0);
    CHECK(p0.sigma_num == 1);
    CHECK(p0.sigma_den == 2);
    CHECK(p0.seed_a == 10);
    CHECK(p0.seed_b == 1);

    auto p2 = kappa_params(2);
    CHECK(p2.sigma_num == 8);
    CHECK(p2.sigma_den == 6);
    CHECK(p2.seed_a == 12);
    CHECK(p2.seed_b == 1);

    CHECK_THROWS_AS(kappa_params(12), missing_params);
}

TEST_CASE("delta values from the generic recursion") {
    CHECK(delta(0, 1) == 11);
    CHECK(delta(0, 2) == 299);
    CHECK(delta(1, 1) == -1);
    CHECK(delta(2, 3) == -363);
}

TEST_CASE("seed range is c < 2 for every kappa") {
    // With the seed read as covering c <= 2 the kappa=3 chain would start
    // from 13 at c=2; the recursion value consistent with the continued
    // fraction is 3501.
    CHECK(delta(3, 2) == 3501);
    auto [p, q] = delta_recursion_polys(3);
    Rational by_hand = p.eval(Rational(2)) * delta(3, 1) + q.eval(Rational(2)) * delta(3, 0);
    CHECK(by_hand == 3501);
    CHECK(by_hand != 13);
}

TEST_CASE("compact kappa=0 form matches the recursion") {
    CHECK(delta0_compact(0) == 1);
    CHECK(delta0_compact(1) == 11);
    CHECK(delta0_compact(2) == 299);
    for (long c = 0; c <= 30; ++c) CHECK(Rational(delta0_compact(c)) == delta(0, c));
}

TEST_CASE("sigma ratio conjecture") {
    CHECK(rho(1) == Rational(1));
    CHECK(rho(2) == make_rational(4, 3));
    CHECK(rho(7) == make_rational(1024, 429));
    CHECK_THROWS_AS(rho(0), std::invalid_argument);
}

TEST_CASE("closed-form triples") {
    auto q12 = q_closed(1, 2);
    CHECK(q12.raw[0] == 48);
    CHECK(q12.raw[1] == -3);
    CHECK(q12.raw[2] == 18);
    CHECK(q12.canonical == GLimit{16, -1, 6});
}

TEST_CASE("closed forms match the continued fractions numerically") {
    for (int k = 0; k <= 3; ++k)
        for (int c = 1; c <= 4; ++c) {
            HPReal q = eval_backward(kappa_cf(k, c), 4000, 120);
            CHECK(digits_agree(q, q_closed_numeric(k, c, 120)) >= 80);
        }
}

TEST_CASE("kappa=4 seed constant: the commonly quoted 1327 contradicts the fraction") {
    // Replaying the closed form with seed 1327 instead of 1373 at c=1:
    // Q = 5!6!(2c)! / (14*15^3 ((2c-1)!!)^2 G - 15 * 1327).
    int digits = 120;
    HPReal g = catalan(digits);
    HPReal q_cf = eval_backward(kappa_cf(4, 1), 4000, digits);
    auto q_with_seed = [&](long seed) {
        HPReal num = HPReal::from_int(BigInt(120) * 720 * 2, digits);
        HPReal den = HPReal::from_int(BigInt(14) * 15 * 15 * 15, digits) * g -
                     HPReal::from_int(15 * seed, digits);
        return num / den;
    };
    CHECK(digits_agree(q_cf, q_with_seed(1373)) >= 100);
    CHECK(digits_agree(q_cf, q_with_seed(1327)) < 5);
}

TEST_CASE("generic recursion specializes to the kappa=0 pair") {
    auto [p, q] = delta_recursion_polys(0);
    CHECK(p == PolyInt{1, 2, 8});
    // -2c(2c-1)^3 = -16c^4 + 24c^3 - 12c^2 + 2c
    CHECK(q == PolyInt{0, 2, -12, 24, -16});
}

TEST_CASE("bootstrap recovers the built-in parameters") {
    int digits = 200, depth = 9000;
    HPReal g = catalan(digits);
    for (int k : {1, 2}) {
        HPReal q1 = eval_backward(kappa_cf(k, 1), depth, digits);
        HPReal q2 = eval_backward(kappa_cf(k, 2), depth, digits);
        KappaParams got = bootstrap(k, q1, q2, g);
        KappaParams want = kappa_params(k);
        CHECK(got.sigma_num == want.sigma_num);
        CHECK(got.sigma_den == want.sigma_den);
        CHECK(got.seed_a == want.seed_a);
        CHECK(got.seed_b == want.seed_b);
    }
}

TEST_CASE("registered parameters extend the table and persist") {
    int digits = 250, depth = 12000;
    HPReal g = catalan(digits);
    HPReal q1 = eval_backward(kappa_cf(8, 1), depth, digits);
    HPReal q2 = eval_backward(kappa_cf(8, 2), depth, digits);
    KappaParams params = bootstrap(8, q1, q2, g);
    CHECK(make_rational(params.sigma_num, params.sigma_den) == rho(8));
    register_params(params, true);
    CHECK(std::filesystem::exists(cache_dir() / "kappa_8.params"));

    HPReal q3 = eval_backward(kappa_cf(8, 3), depth, digits);
    CHECK(digits_agree(q3, q_closed_numeric(8, 3, digits)) >= 100);
}
