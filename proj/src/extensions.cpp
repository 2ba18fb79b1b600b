#include "trimod/extensions.hpp"

namespace trimod {

namespace {

// chi of Hom(A, B) = A* tensor B for A = (na, da), B = (nb, db);
// rank na*nb, degree na*db - nb*da. Zero-rank factors contribute 0.
long long hom_chi(int na, long long da, int nb, long long db, SurfaceData g) {
    if (na == 0 || nb == 0) return 0;
    const long long rank = static_cast<long long>(na) * nb;
    const long long degree = na * db - nb * da;
    return degree + rank * (1 - g.genus());
}

}  // namespace

long long chi_bundle(int n, long long d, SurfaceData g) {
    if (n < 0) throw input_error("bundle rank must be non-negative");
    if (n == 0) {
        if (d != 0) throw input_error("rank-zero bundle must have degree zero");
        return 0;
    }
    return d + static_cast<long long>(n) * (1 - g.genus());
}

ChiReport hom_complex_chi(const TripleType& tpp, const TripleType& tp, SurfaceData g) {
    const long long term0 = hom_chi(tpp.n1, tpp.d1, tp.n1, tp.d1, g) +
                            hom_chi(tpp.n2, tpp.d2, tp.n2, tp.d2, g);
    const long long term1 = hom_chi(tpp.n2, tpp.d2, tp.n1, tp.d1, g);
    return ChiReport{term0 - term1, term0, term1};
}

long long expected_dim(const TripleType& t, SurfaceData g) {
    if (t.n1 < 1 || t.n2 < 1) throw input_error("expected_dim needs n1, n2 >= 1");
    return 1 - hom_complex_chi(t, t, g).chi_total;
}

}  // namespace trimod
