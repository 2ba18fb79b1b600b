#include "trimod/chambers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

namespace trimod {

namespace {

// Validates the critical_values preconditions and returns the top of the
// alpha range: alpha_M for n1 > n2, the explicit cap for n1 = n2.
Rational range_top(const TripleType& t, const std::optional<Rational>& cap) {
    if (t.n1 < 1 || t.n2 < 1 || t.n1 < t.n2) {
        throw input_error("chamber engine requires n1 >= n2 >= 1; apply dual() first");
    }
    if (t.n1 == t.n2) {
        if (!cap) throw input_error("n1 = n2 has no alpha_M; an explicit cap is required");
        if (!(Rational(0) < *cap)) throw input_error("cap must be positive");
        return *cap;
    }
    if (cap) throw input_error("cap is only accepted when n1 = n2");
    return alpha_max(t).value();
}

std::vector<std::pair<int, int>> proper_rank_pairs(const TripleType& t) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a <= t.n1; ++a) {
        for (int b = 0; b <= t.n2; ++b) {
            if (a == 0 && b == 0) continue;
            if (a == t.n1 && b == t.n2) continue;
            pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

}  // namespace

WallSolution wall_alpha(const SubtripleClass& sub, const TripleType& t) {
    require_proper(sub, t);
    const long long n = t.n1 + t.n2;
    const long long np = sub.n1p + sub.n2p;
    const long long dtot = t.d1 + t.d2;
    const long long denom = sub.n2p * n - t.n2 * np;
    if (denom != 0) {
        return WallSolution::value(Rational(dtot * np - sub.dtot * n, denom));
    }
    // Equal rank fractions: the slopes are parallel in alpha.
    if (sub.dtot * n == dtot * np) return WallSolution::everywhere();
    return WallSolution::none();
}

std::vector<Wall> critical_values(const TripleType& t, std::optional<Rational> cap) {
    const Rational top = range_top(t, cap);
    std::vector<Wall> walls;
    if (top < Rational(0)) return walls;

    const long long n = t.n1 + t.n2;
    const long long dtot = t.d1 + t.d2;

    std::map<Rational, std::vector<SubtripleClass>> by_alpha;
    for (auto [n1p, n2p] : proper_rank_pairs(t)) {
        const long long np = n1p + n2p;
        const long long denom = n2p * n - t.n2 * np;
        if (denom == 0) continue;  // all_alpha or no_solution: no wall either way

        // alpha(d') = (dtot*np - d'*n) / denom; solve alpha in [0, top] for d'.
        const Rational at_zero = Rational(dtot * np, n);
        const Rational at_top = (Rational(dtot * np) - top * Rational(denom)) / Rational(n);
        long long lo, hi;
        if (denom > 0) {
            lo = at_top.ceil();
            hi = at_zero.floor();
        } else {
            lo = at_zero.ceil();
            hi = at_top.floor();
        }
        for (long long dp = lo; dp <= hi; ++dp) {
            Rational alpha(dtot * np - dp * n, denom);
            by_alpha[alpha].emplace_back(n1p, n2p, dp);
        }
    }

    walls.reserve(by_alpha.size());
    for (auto& [alpha, witnesses] : by_alpha) {
        std::sort(witnesses.begin(), witnesses.end());
        walls.push_back(Wall{alpha, std::move(witnesses)});
    }
    return walls;
}

std::vector<Chamber> chambers(const TripleType& t, std::optional<Rational> cap) {
    const Rational top = range_top(t, cap);
    std::vector<Chamber> result;
    if (!(Rational(0) < top)) return result;

    std::vector<Rational> bounds{Rational(0)};
    for (const Wall& w : critical_values(t, cap)) bounds.push_back(w.alpha);
    bounds.push_back(top);
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        result.push_back(Chamber{bounds[i], bounds[i + 1]});
    }
    return result;
}

ChamberLocation chamber_of(const TripleType& t, const Rational& alpha,
                           std::optional<Rational> cap) {
    const Rational top = range_top(t, cap);
    if (alpha < Rational(0) || top < alpha) {
        return ChamberLocation{ChamberLocation::Kind::out_of_range, std::nullopt, std::nullopt};
    }
    for (const Wall& w : critical_values(t, cap)) {
        if (w.alpha == alpha) {
            return ChamberLocation{ChamberLocation::Kind::on_wall, std::nullopt, w};
        }
    }
    for (const Chamber& c : chambers(t, cap)) {
        if (c.lower <= alpha && alpha <= c.upper) {
            return ChamberLocation{ChamberLocation::Kind::inside, c, std::nullopt};
        }
    }
    throw internal_error("in-range alpha not located in any chamber");
}

std::vector<Rational> oracle_critical_values(const TripleType& t, std::optional<Rational> cap) {
    const Rational top = range_top(t, cap);
    std::vector<Rational> found;
    if (top < Rational(0)) return found;

    const long long n = t.n1 + t.n2;
    const long long max_den = n * n;
    const auto pairs = proper_rank_pairs(t);

    for (long long b = 1; b <= max_den; ++b) {
        const long long a_hi = (top * Rational(b)).floor();
        for (long long a = 0; a <= a_hi; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const Rational alpha(a, b);
            const Rational ambient = alpha_slope(t, alpha);
            for (auto [n1p, n2p] : pairs) {
                const long long np = n1p + n2p;
                // Slope-proportional classes solve the equality independently
                // of alpha and are not walls.
                if (n2p * n == t.n2 * np) continue;
                // Slope equality forces dtot' = np*mu_alpha(t) - alpha*n2p;
                // the class is realizable iff that value is an integer.
                const Rational dp = Rational(np) * ambient - alpha * Rational(n2p);
                if (dp.is_integer()) {
                    found.push_back(alpha);
                    break;
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::ostream& operator<<(std::ostream& os, const Wall& w) {
    os << "wall alpha=" << w.alpha << " witnesses={";
    for (std::size_t i = 0; i < w.witnesses.size(); ++i) {
        if (i) os << ", ";
        os << w.witnesses[i];
    }
    return os << "}";
}

std::ostream& operator<<(std::ostream& os, const Chamber& c) {
    return os << "(" << c.lower << ", " << c.upper << ")";
}

}  // namespace trimod
