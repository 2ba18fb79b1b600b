#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "trimod/rational.hpp"

namespace trimod {

// Execution policy for the sweep kernels. `serial` is the plain reference
// loop kept for testing; `parallel` is the OpenMP kernel. Both produce
// byte-identical, schedule-independent output.
enum class ExecPolicy { serial, parallel };

// Genus and canonical degree of the base surface. Genus below 2 is rejected.
class SurfaceData {
  public:
    explicit SurfaceData(int genus);

    int genus() const { return genus_; }
    int canonical_degree() const { return 2 * genus_ - 2; }

  private:
    int genus_;
};

// Topological invariants (p, q, d_V, d_W) of a U(p,q)-Higgs bundle.
struct HiggsType {
    int p;
    int q;
    long long d_v;
    long long d_w;

    HiggsType(int p_, int q_, long long dv, long long dw);

    friend bool operator==(const HiggsType&, const HiggsType&) = default;
    friend auto operator<=>(const HiggsType&, const HiggsType&) = default;
};

// Invariants (n1, n2, d1, d2) of a holomorphic triple. Zero ranks are
// permitted (they occur in Hom-complex bookkeeping) but must carry zero
// degree, and at least one rank must be positive.
struct TripleType {
    int n1;
    int n2;
    long long d1;
    long long d2;

    TripleType(int n1_, int n2_, long long d1_, long long d2_);

    friend bool operator==(const TripleType&, const TripleType&) = default;
    friend auto operator<=>(const TripleType&, const TripleType&) = default;
};

// Which Higgs fields vanish at a local minimum: c=0 when the V-slope is
// smaller, b=0 when it is larger, both when the slopes agree.
enum class MinimaType { c_zero, b_zero, both };

// Side selector for the Higgs <-> triple translation.
enum class HiggsSide { c_zero, b_zero };

// Inclusive rectangle of (d_V, d_W) values.
struct DegreeWindow {
    long long dv_lo;
    long long dv_hi;
    long long dw_lo;
    long long dw_hi;

    DegreeWindow(long long dv_lo_, long long dv_hi_, long long dw_lo_, long long dw_hi_);

    long long size() const {
        return (dv_hi - dv_lo + 1) * (dw_hi - dw_lo + 1);
    }
};

// min{p,q}(g-1), the right-hand side of the Milnor-Wood bound.
Rational mw_bound(int p, int q, SurfaceData g);

// |q d_V - p d_W| / (p+q), the left-hand side.
Rational mw_value(const HiggsType& h);

// Whether (d_V, d_W) is an allowed invariant pair; boundary equality counts.
bool is_allowed(const HiggsType& h, SurfaceData g);

// All allowed (d_V, d_W) in the window, sorted lexicographically.
std::vector<HiggsType> census(int p, int q, SurfaceData g, const DegreeWindow& window,
                              ExecPolicy policy = ExecPolicy::parallel);

// Classifies the minima side from the slopes of V and W.
MinimaType minima_type(const HiggsType& h);

// c=0 side: (n1,n2,d1,d2) = (p, q, d_V + p(2g-2), d_W).
// b=0 side: (q, p, d_W + q(2g-2), d_V).
TripleType higgs_to_triple(const HiggsType& h, SurfaceData g, HiggsSide side);

// Exact inverse of higgs_to_triple for the same side.
HiggsType triple_to_higgs(const TripleType& t, SurfaceData g, HiggsSide side);

std::ostream& operator<<(std::ostream& os, const HiggsType& h);
std::ostream& operator<<(std::ostream& os, const TripleType& t);
std::ostream& operator<<(std::ostream& os, MinimaType m);

}  // namespace trimod
