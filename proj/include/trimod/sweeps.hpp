#pragma once

#include <optional>
#include <vector>

#include "trimod/chambers.hpp"
#include "trimod/vhs.hpp"

namespace trimod {

// A triple where the wall sets from critical_values and the denominator-
// bounded oracle scan disagree (expected never).
struct EquivalenceMismatch {
    TripleType t;
    std::optional<Rational> cap;
    std::vector<Rational> formula_alphas;
    std::vector<Rational> oracle_alphas;
};

struct EquivalenceReport {
    long long checked = 0;
    std::vector<EquivalenceMismatch> mismatches;
};

// Runs critical_values against oracle_critical_values on every triple with
// n1 >= n2 >= 1, n1+n2 <= max_rank_sum and |d1|,|d2| <= d_abs; triples with
// n1 = n2 use cap_equal_ranks.
EquivalenceReport wall_equivalence_scan(int max_rank_sum, long long d_abs,
                                        const Rational& cap_equal_ranks,
                                        ExecPolicy policy = ExecPolicy::parallel);

// Classification tallies over every alternating chain of a fixed length with
// ranks in [1, max_rank] and degrees in [-d_abs, d_abs] (both side patterns).
// A "violation" is a chain breaking the minima law: m <= 2 classifying as
// anything but minimum, or m >= 3 classifying as minimum.
struct VhsScanReport {
    long long checked = 0;
    long long minima = 0;
    long long numerical = 0;
    long long by_lemma = 0;
    std::vector<long long> violation_indices;
};

VhsScanReport vhs_scan(int length, int max_rank, long long d_abs, SurfaceData g,
                       ExecPolicy policy = ExecPolicy::parallel);

// Decodes a flat vhs_scan grid index back into its chain (for diagnostics and
// for the serial/parallel cross-checks).
HodgeChain vhs_scan_chain(long long index, int length, int max_rank, long long d_abs);

long long vhs_scan_size(int length, int max_rank, long long d_abs);

}  // namespace trimod
