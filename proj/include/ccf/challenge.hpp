#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccf/lattice.hpp"
#include "ccf/numerics.hpp"
#include "ccf/polynomial.hpp"

namespace ccf {

/// sign * cofactor * prod p^e reconstructs the integer exactly;
/// cofactor > 1 marks an unfactored remainder.
struct FactoredInt {
    int sign = 1;
    std::map<BigInt, unsigned> factors;
    BigInt cofactor = 1;

    BigInt reconstruct() const;
    bool fully_factored() const { return cofactor == 1; }
    std::string to_string() const; // "2^4*3^2*5" style, '-' prefix when negative
};

/// Trial division to smooth_bound, then a Pollard-rho pass bounded by
/// rho_iters steps per attempt (0 skips it); whatever survives is left in
/// the cofactor.
FactoredInt factorize(const BigInt& n, unsigned long smooth_bound = 10000,
                      unsigned long rho_iters = 200000);

FactoredInt parse_factored(const std::string& text);

// --- factorial-type building blocks ----------------------------------------

enum class BlockKind { factorial, semifactorial, power2, catalan, central_binomial };

std::string block_kind_name(BlockKind kind);

/// One term (ax+b) of a product, raised to an integer exponent.
struct BlockTemplate {
    BlockKind kind;
    long a = 1, b = 0;
    int exponent = 1;

    bool domain_ok(long c) const;      // argument valid at x = c (exponent ignored)
    Rational value(long c) const;      // block value without the exponent
    long valuation(const BigInt& p, long c) const; // p-adic valuation, no exponent
    std::string to_string() const;
};

/// exact p-adic valuation of template value at x = c (exponent ignored)
long block_valuation(BlockKind kind, long a, long b, const BigInt& p, long c);

struct BlockFit {
    std::vector<BlockTemplate> terms;
    Rational constant;

    Rational value(long c) const;
    std::string to_string() const;
};

struct FitBounds {
    long a_max = 2;       // |a| <= a_max, a != 0
    long b_max = 8;       // |b| <= b_max
    int exponent_max = 2; // 0 < |e| <= exponent_max
};

/// Search products of at most max_terms blocks plus a rational constant that
/// reproduce every (c, value) data point exactly. Candidates are verified by
/// multiplying out, then ranked by term count.
std::vector<BlockFit> fit_building_blocks(const std::vector<std::pair<long, FactoredInt>>& series,
                                          const FitBounds& bounds, int max_terms);

// --- P-recurrence guessing --------------------------------------------------

/// sum_{i=0..order} coeffs[i](c) * v_{c-order+i} = 0 on the whole range.
struct RecurrenceGuess {
    int order = 0;
    std::vector<PolyInt> coeffs;
    long c_first = 0, c_last = 0;

    std::string to_string() const;
};

/// Exact homogeneous solve for coefficient polynomials of degree <= max_degree.
/// values[k] is v_{c0+k}. Empty optional: only the trivial kernel.
std::optional<RecurrenceGuess> guess_p_recurrence(const std::vector<Rational>& values, long c0,
                                                  int order, int max_degree);

// --- challenge data files ----------------------------------------------------

struct GridRecord {
    long c = 0;
    long kappa = 0;
    BigInt alpha, gamma;

    std::optional<Rational> rho() const; // alpha/gamma, empty when gamma = 0
    bool operator==(const GridRecord& o) const = default;
};

enum class DataFormat { brace, csv, factored };

DataFormat format_for_path(const std::filesystem::path& path);

std::string render_data_file(const std::vector<GridRecord>& records, DataFormat format);
void emit_data_file(const std::vector<GridRecord>& records, const std::filesystem::path& path,
                    DataFormat format);
std::vector<GridRecord> read_data_file(const std::filesystem::path& path);
std::vector<GridRecord> parse_data_file(const std::string& content, DataFormat format);

} // namespace ccf
