#pragma once

#include "trimod/invariants.hpp"

namespace trimod {

// Euler characteristic of the two-term extension complex
//   Hom(E1'', E1') + Hom(E2'', E2')  ->  Hom(E2'', E1')
// split by term. chi_total = chi_term0 - chi_term1 always.
struct ChiReport {
    long long chi_total;
    long long chi_term0;
    long long chi_term1;

    friend bool operator==(const ChiReport&, const ChiReport&) = default;
};

// Riemann-Roch on a genus-g curve: chi(n, d) = d + n(1-g).
// Standard fact imported as plumbing. n = 0 requires d = 0 and gives 0.
long long chi_bundle(int n, long long d, SurfaceData g);

// chi of the extension complex of tpp by tp. Zero-rank tensor factors
// contribute 0, so degenerate bookkeeping pieces are fine.
ChiReport hom_complex_chi(const TripleType& tpp, const TripleType& tp, SurfaceData g);

// 1 - chi(t, t); the moduli dimension at smooth points, which covers the
// alpha >= 2g-2 regime. Standard count imported as plumbing.
long long expected_dim(const TripleType& t, SurfaceData g);

}  // namespace trimod
