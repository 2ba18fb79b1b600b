#pragma once

#include <compare>
#include <iosfwd>

#include "trimod/invariants.hpp"
#include "trimod/rational.hpp"

namespace trimod {

// Upper end of the viable alpha range. Unbounded exactly when n1 = n2.
// A finite value can be negative, in which case every alpha range is empty.
class AlphaBound {
  public:
    static AlphaBound finite(Rational value) { return AlphaBound(false, value); }
    static AlphaBound unbounded() { return AlphaBound(true, Rational{}); }

    bool is_unbounded() const { return unbounded_; }
    const Rational& value() const {
        if (unbounded_) throw internal_error("alpha bound is unbounded");
        return value_;
    }

    friend bool operator==(const AlphaBound&, const AlphaBound&) = default;

  private:
    AlphaBound(bool unbounded, Rational value) : unbounded_(unbounded), value_(value) {}

    bool unbounded_;
    Rational value_;
};

// Numerical class of a candidate subtriple: ranks (n1', n2') and the total
// degree d1'+d2' (only the total enters the alpha-slope).
struct SubtripleClass {
    int n1p;
    int n2p;
    long long dtot;

    SubtripleClass(int n1p_, int n2p_, long long dtot_);

    friend bool operator==(const SubtripleClass&, const SubtripleClass&) = default;
    friend auto operator<=>(const SubtripleClass&, const SubtripleClass&) = default;
};

// d/n in lowest terms; n must be positive.
Rational slope(int n, long long d);

// mu_alpha(t) = (d1+d2)/(n1+n2) + alpha * n2/(n1+n2).
Rational alpha_slope(const TripleType& t, const Rational& alpha);

// Unbounded for n1 = n2, else 2 n1 (mu(E1) - mu(E2)) / (n1 - n2).
// Rejects n1 < n2: dualize first (see dual).
AlphaBound alpha_max(const TripleType& t);

// (n1,n2,d1,d2) -> (n2,n1,-d2,-d1); an involution.
TripleType dual(const TripleType& t);

// mu_alpha(t) - mu_alpha(sub). Positive: sub does not destabilize
// numerically; zero: strict semistability equality; negative: numerical
// destabilization. `sub` must be proper relative to t.
Rational subtriple_margin(const SubtripleClass& sub, const TripleType& t, const Rational& alpha);

// Throws input_error unless 0 <= n1p <= n1, 0 <= n2p <= n2 and the rank pair
// is neither (0,0) nor (n1,n2).
void require_proper(const SubtripleClass& sub, const TripleType& t);

std::ostream& operator<<(std::ostream& os, const SubtripleClass& s);
std::ostream& operator<<(std::ostream& os, const AlphaBound& b);

}  // namespace trimod
