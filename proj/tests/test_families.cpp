#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "ccf/families.hpp"
#include "ccf/kappa.hpp"

using namespace ccf;

namespace {

struct CacheSetup {
    CacheSetup() {
        set_cache_dir(std::filesystem::temp_directory_path() / "ccf-test-cache");
    }
} cache_setup;

} // namespace

TEST_CASE("family coefficients") {
    CFSpec cf = family_cf(FamilySpec{3, 1, 0, 0, 0});
    CHECK(cf.a0 == 1);
    CHECK(cf.eval_a(2) == 19);       // 12 + 6 + 1
    CHECK(cf.eval_b(1) == -2);       // -2*1*1*1*1
    CFSpec cf2 = family_cf(FamilySpec{7, 3, 0, 2, 4});
    CHECK(cf2.eval_b(2) == -2 * 2 * 2 * 4 * 6);
}

TEST_CASE("b is symmetric in the three offsets") {
    FamilySpec s1{11, 9, 2, 2, 5}, s2{11, 9, 2, 5, 2};
    CHECK(s1.same_cf(s2));
    CHECK(s1.offsets_sorted() == s2.offsets_sorted());
}

TEST_CASE("generator reproduces the kappa grid at j=1") {
    // (i=0, j=1): a = 3n^2+3n+1, b = -2n^3(n+mu), the kappa=0 column.
    CFSpec gen = ij_family(0, 1, 3);
    CFSpec kap = kappa_cf(0, 3);
    CHECK(gen.a == kap.a);
    CHECK(gen.b_expanded() == kap.b_expanded());
}

TEST_CASE("generator enumeration bounds") {
    auto whole = enumerate_generator(3, 3);
    CHECK(whole.size() == 3); // i=3: j = 0, 1, 2
    for (const auto& e : whole) CHECK(e.two_i == 6);
    auto half = enumerate_generator(4, 3, true);
    CHECK(half.size() == 10); // two_i 6, 7, 8 with 3 + 3 + 4 cells
}

TEST_CASE("parametric templates expand to the catalog columns") {
    auto catalog = family_catalog();
    REQUIRE(catalog.size() == 5);
    FamilySpec first = catalog[0].instantiate(0, 4);
    CHECK(first.delta == 7);
    CHECK(first.epsilon == 3);
    CHECK(first.tau == 2);
    CHECK(first.eta == 0);
    for (const auto& tpl : catalog)
        for (long i = 0; i <= 3; ++i) {
            FamilySpec s = tpl.instantiate(i, 1);
            CHECK(s.epsilon == (s.eta + 1) * (s.tau + 1));
        }
}

TEST_CASE("sporadic catalog shape") {
    auto sporadics = sporadic_catalog();
    CHECK(sporadics.size() == 22);
    int with_triple = 0;
    for (const auto& e : sporadics) with_triple += e.triple.has_value();
    CHECK(with_triple == 7);
}

TEST_CASE("ratio identity on reference triples") {
    auto rowsv = ratio_identities();
    REQUIRE(rowsv.size() == 4);
    // 2^8 * 18 = 4608 = 3 * 768 * (2*3-5) * C_2
    CHECK(check_ratio_identity(rowsv[0], 3, GLimit{768, 77, 18}) == IdentityCheck::holds);
    // 2^15 * 9450 = 5 * 294912 * (2*6-7) * C_5
    CHECK(check_ratio_identity(rowsv[1], 6, GLimit{294912, 11497, 9450}) == IdentityCheck::holds);
    // an overall sign flip cancels; a relative flip is reported, not failed
    CHECK(check_ratio_identity(rowsv[0], 3, GLimit{-768, -77, -18}) == IdentityCheck::holds);
    CHECK(check_ratio_identity(rowsv[0], 3, GLimit{-768, 77, 18}) ==
          IdentityCheck::holds_negated);
    CHECK(check_ratio_identity(rowsv[0], 3, GLimit{768, 77, 19}) == IdentityCheck::fails);
}

TEST_CASE("sporadic triples are rediscovered") {
    DiscoveryConfig cfg;
    cfg.depth = 6000;
    cfg.digits = 150;
    auto sporadics = sporadic_catalog();
    const auto& row = sporadics[2]; // (15,19,2,2,2) -> (8,-49,54)
    auto found = discover_limit(family_cf(row.spec), cfg);
    REQUIRE(found.has_value());
    CHECK(found->triple == normalize(*row.triple));
}

TEST_CASE("family column discovery matches the kappa=0 closed forms") {
    DiscoveryConfig cfg;
    cfg.depth = 6000;
    cfg.digits = 150;
    auto column = discover_family_column(FamilySpec{3, 1, 0, 0, 0}, 3, cfg);
    REQUIRE(column.size() == 4);
    for (long mu = 1; mu <= 3; ++mu) {
        REQUIRE(column[mu].has_value());
        CHECK(column[mu]->triple == q_closed(0, mu).canonical);
    }
}

TEST_CASE("limits without the constant") {
    CHECK(no_g_limit(1, 2) == Rational(15));
    CHECK(no_g_limit(2, 0) == make_rational(505, 33));
    CHECK(no_g_limit(3, 1) == make_rational(25 * 461, 667));
    CHECK(no_g_limit(5, 2) == Rational(12));
    CHECK(no_g_limit(5, 4) == Rational(0));
    CHECK_THROWS_AS(no_g_limit(6, 0), std::invalid_argument);

    HPReal q = eval_backward(no_g_cf(2, 1), 4000, 80);
    CHECK(digits_agree(q, HPReal::from_rational(make_rational(515, 33), 80)) >= 30);
}
