#pragma once

#include <optional>
#include <vector>

#include "ccf/cf.hpp"
#include "ccf/discovery.hpp"
#include "ccf/lattice.hpp"

namespace ccf {

/// a_n = 3n^2 + delta n + epsilon, b_n = -2n(n+tau)(n+eta)(n+mu).
/// b is symmetric in (tau, eta, mu); mu is the running index by convention.
struct FamilySpec {
    BigInt delta, epsilon, tau, eta, mu;

    /// (tau, eta, mu) as a sorted multiset, for table comparisons.
    std::array<BigInt, 3> offsets_sorted() const;
    bool same_cf(const FamilySpec& o) const;
};

CFSpec family_cf(const FamilySpec& spec);

/// Appendix generator: a_n = j(2i-j+2) + (4i+3)n + 3n^2,
/// b_n = -2n(n+j-1)(n+2i-j+1)(n+mu). two_i = 2i admits half-integer i.
CFSpec ij_family(long i, long j, long mu);
CFSpec ij_family_2i(long two_i, long j, long mu);

struct GeneratorEntry {
    long two_i; // 2i
    long j;
    CFSpec cf;
};

/// All (i, j) with 3 <= i <= l_bound, 0 <= j <= floor(i/2)+1;
/// half_steps additionally visits i = 7/2, 9/2, ...
std::vector<GeneratorEntry> enumerate_generator(long l_bound, long mu, bool half_steps = false);

/// The five parametric family rows (running mu, i = 0, 1, ...),
/// epsilon = (eta+1)(tau+1).
struct FamilyTemplate {
    long delta_slope, delta_offset; // delta = slope*i + offset
    long eta;
    long tau_slope, tau_offset;

    FamilySpec instantiate(long i, long mu) const;
};
std::vector<FamilyTemplate> family_catalog();

/// Catalog of sporadic specs; a triple is present where one is known.
struct SporadicEntry {
    FamilySpec spec;
    std::optional<GLimit> triple;
};
std::vector<SporadicEntry> sporadic_catalog();

/// Ratio identities between alpha and gamma (power-of-2 scale, odd linear
/// factors, Catalan-number factor):
///   2^(2c+s) * lhs(c) * gamma = k * rhs1(c) * rhs2(c) * C_{c-1} * alpha
struct RatioIdentity {
    long delta, epsilon, eta, tau; // the family the identity belongs to
    long pow2_offset;              // s
    long k;
    PolyInt lhs_extra;             // 1 when absent
    PolyInt rhs1, rhs2;            // 1 when absent
};
std::vector<RatioIdentity> ratio_identities();

enum class IdentityCheck { holds, holds_negated, fails, degenerate };
IdentityCheck check_ratio_identity(const RatioIdentity& row, long c, const GLimit& triple);

/// Discover triples for a family along mu = 0..mu_max; entries that fail
/// discovery are left empty rather than aborting the column.
std::vector<std::optional<Discovery>> discover_family_column(const FamilySpec& base, long mu_max,
                                                             const DiscoveryConfig& config = {});

/// Table of limits not involving G: variant 1..5, parameter i (or j for the
/// half-integer variant 5). Returns the closed rational value.
Rational no_g_limit(int variant, long i);
CFSpec no_g_cf(int variant, long i);

} // namespace ccf
