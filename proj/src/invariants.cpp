#include "trimod/invariants.hpp"

#include <cstdlib>
#include <ostream>

namespace trimod {

SurfaceData::SurfaceData(int genus) : genus_(genus) {
    if (genus < 2) throw input_error("genus must be at least 2");
}

HiggsType::HiggsType(int p_, int q_, long long dv, long long dw)
    : p(p_), q(q_), d_v(dv), d_w(dw) {
    if (p < 1 || q < 1) throw input_error("Higgs ranks p, q must be positive");
}

TripleType::TripleType(int n1_, int n2_, long long d1_, long long d2_)
    : n1(n1_), n2(n2_), d1(d1_), d2(d2_) {
    if (n1 < 0 || n2 < 0) throw input_error("triple ranks must be non-negative");
    if (n1 + n2 < 1) throw input_error("triple needs at least one positive rank");
    if ((n1 == 0 && d1 != 0) || (n2 == 0 && d2 != 0)) {
        throw input_error("rank-zero factor must have degree zero");
    }
}

DegreeWindow::DegreeWindow(long long dv_lo_, long long dv_hi_, long long dw_lo_, long long dw_hi_)
    : dv_lo(dv_lo_), dv_hi(dv_hi_), dw_lo(dw_lo_), dw_hi(dw_hi_) {
    if (dv_lo > dv_hi || dw_lo > dw_hi) throw input_error("empty degree window");
}

Rational mw_bound(int p, int q, SurfaceData g) {
    if (p < 1 || q < 1) throw input_error("ranks must be positive");
    return Rational(static_cast<long long>(std::min(p, q)) * (g.genus() - 1));
}

Rational mw_value(const HiggsType& h) {
    long long lhs = h.q * h.d_v - h.p * h.d_w;
    return Rational(std::llabs(lhs), h.p + h.q);
}

bool is_allowed(const HiggsType& h, SurfaceData g) {
    return mw_value(h) <= mw_bound(h.p, h.q, g);
}

MinimaType minima_type(const HiggsType& h) {
    // d_V/p vs d_W/q by cross-multiplication; exact.
    long long lhs = h.q * h.d_v;
    long long rhs = h.p * h.d_w;
    if (lhs < rhs) return MinimaType::c_zero;
    if (lhs > rhs) return MinimaType::b_zero;
    return MinimaType::both;
}

TripleType higgs_to_triple(const HiggsType& h, SurfaceData g, HiggsSide side) {
    const long long k = g.canonical_degree();
    if (side == HiggsSide::c_zero) {
        return TripleType(h.p, h.q, h.d_v + h.p * k, h.d_w);
    }
    return TripleType(h.q, h.p, h.d_w + h.q * k, h.d_v);
}

HiggsType triple_to_higgs(const TripleType& t, SurfaceData g, HiggsSide side) {
    const long long k = g.canonical_degree();
    if (side == HiggsSide::c_zero) {
        return HiggsType(t.n1, t.n2, t.d1 - t.n1 * k, t.d2);
    }
    return HiggsType(t.n2, t.n1, t.d2, t.d1 - t.n1 * k);
}

std::ostream& operator<<(std::ostream& os, const HiggsType& h) {
    return os << "(p=" << h.p << ", q=" << h.q << ", d_V=" << h.d_v << ", d_W=" << h.d_w << ")";
}

std::ostream& operator<<(std::ostream& os, const TripleType& t) {
    return os << "(" << t.n1 << ", " << t.n2 << ", " << t.d1 << ", " << t.d2 << ")";
}

std::ostream& operator<<(std::ostream& os, MinimaType m) {
    switch (m) {
        case MinimaType::c_zero: return os << "CZero";
        case MinimaType::b_zero: return os << "BZero";
        case MinimaType::both: return os << "Both";
    }
    return os;
}

}  // namespace trimod
