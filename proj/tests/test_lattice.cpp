#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "ccf/cf.hpp"
#include "ccf/errors.hpp"
#include "ccf/lattice.hpp"

using namespace ccf;

namespace {

struct CacheSetup {
    CacheSetup() {
        set_cache_dir(std::filesystem::temp_directory_path() / "ccf-test-cache");
    }
} cache_setup;

LatticeBasis rows(std::initializer_list<std::initializer_list<long>> data) {
    LatticeBasis b;
    for (auto& row : data) {
        std::vector<BigInt> r;
        for (long x : row) r.emplace_back(x);
        b.push_back(std::move(r));
    }
    return b;
}

} // namespace

TEST_CASE("identity basis is already reduced") {
    LatticeBasis id = rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(is_lll_reduced(id));
    CHECK(lll(id) == id);
}

TEST_CASE("small basis gets reduced") {
    LatticeBasis b = rows({{1, 1, 2}, {-1, 0, 2}});
    LatticeBasis r = lll(b);
    CHECK(is_lll_reduced(r));
}

TEST_CASE("dependent rows are rejected") {
    CHECK_THROWS_AS(lll(rows({{1, 1}, {2, 2}})), degenerate_basis);
}

TEST_CASE("planted relation is found") {
    HPReal g = catalan(120);
    HPReal num = HPReal::from_int(5, 120);
    HPReal den = HPReal::from_int(7, 120) + HPReal::from_int(11, 120) * g;
    HPReal q = num / den;
    auto t = find_g_relation(q, g, 10);
    REQUIRE(t.has_value());
    CHECK(*t == GLimit{5, 7, 11});
}

TEST_CASE("relation of a continued-fraction limit") {
    HPReal g = catalan(250);
    HPReal q = eval_backward(kappa_cf(0, 3), 12000, 250);
    auto t = find_g_relation(q, g, 20);
    REQUIRE(t.has_value());
    CHECK(*t == GLimit{720, -299, 450});
}

TEST_CASE("zero limit maps to the trivial triple") {
    HPReal g = catalan(120);
    HPReal zero(120);
    auto t = find_g_relation(zero, g, 10);
    REQUIRE(t.has_value());
    CHECK(*t == GLimit{0, 0, 1});
}

TEST_CASE("normalize reduces content and fixes orientation") {
    CHECK(normalize(48, -3, 18) == GLimit{16, -1, 6});
    CHECK(normalize(0, 0, 5) == GLimit{0, 0, 1});
    CHECK(normalize(0, -4, 0) == GLimit{0, 1, 0});
    CHECK(normalize(-6, 1, 0) == GLimit{-6, 1, 0});
    CHECK(normalize(6, -1, 0) == GLimit{-6, 1, 0});
}

TEST_CASE("normalize is scale invariant") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> entry(-500, 500);
    std::uniform_int_distribution<long> scale(1, 50);
    for (int t = 0; t < 100; ++t) {
        long a = entry(rng), b = entry(rng), g = entry(rng);
        if (a == 0 && b == 0 && g == 0) continue;
        long k = scale(rng) * (rng() % 2 ? 1 : -1);
        CHECK(normalize(a, b, g) == normalize(a * k, b * k, g * k));
    }
}

TEST_CASE("verify_relation separates right from wrong triples") {
    HPReal g = catalan(250);
    HPReal q = eval_backward(kappa_cf(1, 1), 12000, 250);
    CHECK(verify_relation(GLimit{4, 1, 2}, q, g) >= 200);
    CHECK(verify_relation(GLimit{4, 1, 3}, q, g) < 5);
}
