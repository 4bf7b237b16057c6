#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ccf/challenge.hpp"
#include "ccf/errors.hpp"
#include "ccf/kappa.hpp"

using namespace ccf;
namespace fs = std::filesystem;

TEST_CASE("factorize small integers") {
    CHECK(factorize(720).to_string() == "2^4*3^2*5");
    CHECK(factorize(450).to_string() == "2*3^2*5^2");
    CHECK(factorize(-450).to_string() == "-2*3^2*5^2");
    CHECK(factorize(1).to_string() == "1");
    CHECK(factorize(97).to_string() == "97");
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize leaves hard remainders in the cofactor") {
    // product of two 25-digit primes, rho disabled
    BigInt p("1000000000000000000000000"), q("2000000000000000000000000");
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    FactoredInt f = factorize(p * q, 1000, 0);
    CHECK_FALSE(f.fully_factored());
    CHECK(f.reconstruct() == p * q);
}

TEST_CASE("parse_factored round-trips") {
    for (const char* s : {"2^4*3^2*5", "-2*3^2*5^2", "97", "1"}) {
        FactoredInt f = parse_factored(s);
        CHECK(f.reconstruct() == factorize(f.reconstruct()).reconstruct());
        CHECK(factorize(f.reconstruct()).to_string() == s);
    }
    CHECK_THROWS_AS(parse_factored("2^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factored(""), std::invalid_argument);
}

TEST_CASE("p-adic valuations of building blocks") {
    CHECK(block_valuation(BlockKind::factorial, 1, 0, 2, 6) == 4);   // v2(6!) = 4
    CHECK(block_valuation(BlockKind::factorial, 2, 0, 2, 3) == 4);   // v2(6!)
    CHECK(block_valuation(BlockKind::semifactorial, 2, -1, 3, 4) == 1); // v3(7!! = 105)
    CHECK(block_valuation(BlockKind::catalan, 1, 0, 2, 4) == 1);     // v2(C_4 = 14)
    CHECK(block_valuation(BlockKind::power2, 1, 0, 2, 5) == 5);
}

TEST_CASE("block values") {
    BlockTemplate f{BlockKind::factorial, 2, 0, 1};
    CHECK(f.value(3) == Rational(720));
    BlockTemplate s{BlockKind::semifactorial, 2, -1, 2};
    CHECK(s.value(4) == Rational(105));
    CHECK_FALSE(f.domain_ok(-1));
}

TEST_CASE("fit handles degenerate inputs") {
    std::vector<std::pair<long, FactoredInt>> tiny;
    for (long c = 1; c <= 3; ++c) tiny.emplace_back(c, factorize(BigInt(c)));
    CHECK_THROWS_AS(fit_building_blocks(tiny, FitBounds{}, 1), insufficient_data);

    std::vector<std::pair<long, FactoredInt>> flipping;
    for (long c = 1; c <= 6; ++c) flipping.emplace_back(c, factorize(BigInt(c % 2 ? 3 : -3)));
    CHECK(fit_building_blocks(flipping, FitBounds{}, 1).empty());
}

TEST_CASE("fit finds a pure constant") {
    std::vector<std::pair<long, FactoredInt>> series;
    for (long c = 1; c <= 8; ++c) series.emplace_back(c, factorize(BigInt(45)));
    auto fits = fit_building_blocks(series, FitBounds{}, 1);
    REQUIRE_FALSE(fits.empty());
    CHECK(fits.front().terms.empty());
    CHECK(fits.front().constant == Rational(45));
}

TEST_CASE("guess recovers the factorial recurrence") {
    std::vector<Rational> values;
    BigInt f = 1;
    values.emplace_back(f);
    for (long c = 1; c <= 9; ++c) {
        f *= BigInt(2 * c) * (2 * c - 1);
        values.emplace_back(f);
    }
    auto guess = guess_p_recurrence(values, 0, 1, 2);
    REQUIRE(guess.has_value());
    REQUIRE(guess->coeffs.size() == 2);
    CHECK(guess->coeffs[0] == PolyInt{0, -2, 4}); // 2c(2c-1)
    CHECK(guess->coeffs[1] == PolyInt{-1});
}

TEST_CASE("guess recovers a constant recurrence") {
    std::vector<Rational> values(8, Rational(7));
    auto guess = guess_p_recurrence(values, 0, 1, 0);
    REQUIRE(guess.has_value());
    CHECK(guess->coeffs[0] == PolyInt{1});
    CHECK(guess->coeffs[1] == PolyInt{-1});
}

TEST_CASE("guess needs enough values") {
    std::vector<Rational> values(5, Rational(1));
    CHECK_THROWS_AS(guess_p_recurrence(values, 0, 2, 4), insufficient_data);
}

TEST_CASE("guess recovers the delta recursion") {
    std::vector<Rational> values;
    for (long c = 0; c < 20; ++c) values.push_back(delta(1, c));
    auto guess = guess_p_recurrence(values, 0, 2, 4);
    REQUIRE(guess.has_value());
    auto [p, q] = delta_recursion_polys(1);
    CHECK(guess->coeffs[0] == q);
    CHECK(guess->coeffs[1] == p);
    CHECK(guess->coeffs[2] == PolyInt{-1});
}

TEST_CASE("data files round-trip in every format") {
    std::vector<GridRecord> records;
    for (long k = 0; k <= 1; ++k)
        for (long c = 1; c <= 4; ++c) {
            auto closed = q_closed(static_cast<int>(k), c);
            records.push_back({c, k, closed.raw[0], closed.raw[2]});
        }
    for (DataFormat fmt : {DataFormat::brace, DataFormat::csv, DataFormat::factored})
        CHECK(parse_data_file(render_data_file(records, fmt), fmt) == records);

    fs::path dir = fs::temp_directory_path() / "ccf-test-datafiles";
    fs::create_directories(dir);
    fs::path path = dir / "grid.csv";
    emit_data_file(records, path, DataFormat::csv);
    CHECK(read_data_file(path) == records);
    fs::remove_all(dir);
}

TEST_CASE("format is inferred from the extension") {
    CHECK(format_for_path("x.csv") == DataFormat::csv);
    CHECK(format_for_path("x.fac") == DataFormat::factored);
    CHECK(format_for_path("x.txt") == DataFormat::brace);
}

TEST_CASE("inconsistent ratio column is rejected") {
    CHECK_THROWS_AS(parse_data_file("{1, 0, 2, 2, 2}\n", DataFormat::brace), datafile_error);
    CHECK_THROWS_AS(parse_data_file("{1, 0, 1, 2}\n", DataFormat::brace), datafile_error);
    CHECK(parse_data_file("", DataFormat::brace).empty());
    CHECK(parse_data_file("{1, 0, 1, 2, 2}\n", DataFormat::brace).size() == 1);
}

TEST_CASE("gamma-free records have no ratio") {
    GridRecord r{2, 0, BigInt(5), BigInt(0)};
    CHECK_FALSE(r.rho().has_value());
    GridRecord r2{2, 0, BigInt(6), BigInt(4)};
    CHECK(r2.rho() == make_rational(3, 2));
}
