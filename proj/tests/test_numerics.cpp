#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "ccf/cf.hpp"
#include "ccf/numerics.hpp"

using namespace ccf;
namespace fs = std::filesystem;

namespace {

const char* kCatalan40 = "0.9159655941772190150546035149323841107741";

struct CacheSetup {
    CacheSetup() { set_cache_dir(fs::temp_directory_path() / "ccf-test-cache"); }
} cache_setup;

} // namespace

TEST_CASE("catalan matches reference digits") {
    HPReal g = catalan(40);
    HPReal ref = HPReal::from_string(kCatalan40, 40);
    CHECK(digits_agree(g, ref) >= 39);
}

TEST_CASE("catalan requests at different precision share a prefix") {
    HPReal g50 = catalan(50);
    HPReal g60 = catalan(60);
    CHECK(digits_agree(g50, g60) >= 49);
}

TEST_CASE("catalan rejects tiny and oversized requests") {
    CHECK_THROWS_AS(catalan(5), std::invalid_argument);
    int cap = catalan_digit_cap();
    CHECK_THROWS_AS(catalan(cap + 1), std::runtime_error);
}

TEST_CASE("catalan recovers from a corrupted cache entry") {
    fs::path dir = fs::temp_directory_path() / "ccf-test-cache-corrupt";
    fs::remove_all(dir);
    set_cache_dir(dir);
    catalan(50);
    fs::path file = dir / "catalan_50.txt";
    REQUIRE(fs::exists(file));
    {
        std::ofstream out(file);
        out << "not a digit count\n0.91x96\n";
    }
    HPReal g = catalan(50);
    CHECK(digits_agree(g, HPReal::from_string(kCatalan40, 50)) >= 39);
    set_cache_dir(fs::temp_directory_path() / "ccf-test-cache");
    fs::remove_all(dir);
}

TEST_CASE("catalan agrees with the value implied by a continued fraction") {
    // Q_{1,1} = 4/(2G+1), so G = (4/Q - 1)/2.
    HPReal q = eval_backward(kappa_cf(1, 1), 12000, 60);
    HPReal four = HPReal::from_int(4, 60);
    HPReal one = HPReal::from_int(1, 60);
    HPReal two = HPReal::from_int(2, 60);
    HPReal g = (four / q - one) / two;
    CHECK(digits_agree(g, catalan(60)) >= 30);
}

TEST_CASE("digits_agree counts shared leading digits") {
    auto mk = [](const char* s) { return HPReal::from_string(s, 40); };
    CHECK(digits_agree(mk("1.2345"), mk("1.2346")) == 4);
    CHECK(digits_agree(mk("0.91596559"), mk("0.91596550")) == 7);
    CHECK(digits_agree(mk("1.5"), mk("-1.5")) == 0);
    CHECK(digits_agree(mk("0.5"), mk("0.5")) >= 39);
}

TEST_CASE("rational_reconstruct recovers simple fractions") {
    HPReal x = HPReal::from_string("0.125", 50);
    auto r = rational_reconstruct(x, 1000);
    REQUIRE(r.has_value());
    CHECK(*r == make_rational(1, 8));
}

TEST_CASE("rational_reconstruct refuses a bad denominator bound") {
    HPReal phi = HPReal::from_string("0.6180339887498948482045868343656381177203", 40);
    CHECK_FALSE(rational_reconstruct(phi, 1000).has_value());
}

TEST_CASE("rational_reconstruct round-trips random fractions") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int t = 0; t < 100; ++t) {
        Rational want = make_rational(num(rng), den(rng));
        HPReal x = HPReal::from_rational(want, 80);
        auto got = rational_reconstruct(x, 2000000);
        REQUIRE(got.has_value());
        CHECK(*got == want);
    }
}

TEST_CASE("HPReal arithmetic works at the smaller precision") {
    HPReal a = HPReal::from_int(1, 100);
    HPReal b = HPReal::from_int(3, 40);
    HPReal q = a / b;
    CHECK(q.precision_digits() == 40);
    CHECK(q.to_string(10) == std::string("0.3333333333"));
}

TEST_CASE("HPReal::round returns the nearest integer") {
    CHECK(HPReal::from_string("2.4", 30).round() == 2);
    CHECK(HPReal::from_string("-2.6", 30).round() == -3);
}

TEST_CASE("make_rational canonicalizes") {
    Rational r = make_rational(6, 4);
    CHECK(r.get_num() == 3);
    CHECK(r.get_den() == 2);
    CHECK(make_rational(2, -4) == make_rational(-1, 2));
}
