#include "trimod/stability.hpp"

#include <ostream>

namespace trimod {

SubtripleClass::SubtripleClass(int n1p_, int n2p_, long long dtot_)
    : n1p(n1p_), n2p(n2p_), dtot(dtot_) {
    if (n1p < 0 || n2p < 0) throw input_error("subtriple ranks must be non-negative");
}

Rational slope(int n, long long d) {
    if (n < 1) throw input_error("slope needs positive rank");
    return Rational(d, n);
}

Rational alpha_slope(const TripleType& t, const Rational& alpha) {
    const int n = t.n1 + t.n2;
    return Rational(t.d1 + t.d2, n) + alpha * Rational(t.n2, n);
}

AlphaBound alpha_max(const TripleType& t) {
    if (t.n1 < 1 || t.n2 < 1) throw input_error("alpha_max needs n1, n2 >= 1");
    if (t.n1 == t.n2) return AlphaBound::unbounded();
    if (t.n1 < t.n2) {
        throw input_error("alpha_max requires n1 >= n2; apply dual() first");
    }
    const Rational diff = slope(t.n1, t.d1) - slope(t.n2, t.d2);
    return AlphaBound::finite(Rational(2 * t.n1, t.n1 - t.n2) * diff);
}

TripleType dual(const TripleType& t) {
    return TripleType(t.n2, t.n1, -t.d2, -t.d1);
}

void require_proper(const SubtripleClass& sub, const TripleType& t) {
    if (sub.n1p > t.n1 || sub.n2p > t.n2) {
        throw input_error("subtriple ranks exceed the ambient triple");
    }
    if (sub.n1p == 0 && sub.n2p == 0) throw input_error("subtriple class (0,0) is not proper");
    if (sub.n1p == t.n1 && sub.n2p == t.n2) {
        throw input_error("full-rank subtriple class is not proper");
    }
}

Rational subtriple_margin(const SubtripleClass& sub, const TripleType& t, const Rational& alpha) {
    require_proper(sub, t);
    const int np = sub.n1p + sub.n2p;
    const Rational sub_slope = Rational(sub.dtot, np) + alpha * Rational(sub.n2p, np);
    return alpha_slope(t, alpha) - sub_slope;
}

std::ostream& operator<<(std::ostream& os, const SubtripleClass& s) {
    return os << "(" << s.n1p << ", " << s.n2p << ", " << s.dtot << ")";
}

std::ostream& operator<<(std::ostream& os, const AlphaBound& b) {
    if (b.is_unbounded()) return os << "unbounded";
    return os << b.value();
}

}  // namespace trimod
