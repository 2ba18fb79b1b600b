#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "trimod/stability.hpp"

namespace trimod {

// A critical value of alpha together with every proper numerical class that
// achieves slope equality there.
struct Wall {
    Rational alpha;
    std::vector<SubtripleClass> witnesses;

    friend bool operator==(const Wall&, const Wall&) = default;
};

// Open interval between consecutive walls (or between a range endpoint and
// the nearest wall).
struct Chamber {
    Rational lower;
    Rational upper;

    friend bool operator==(const Chamber&, const Chamber&) = default;
};

// Solution set of mu_alpha(sub) = mu_alpha(t) viewed as an equation in alpha.
struct WallSolution {
    enum class Kind { value, no_solution, all_alpha };

    Kind kind;
    Rational alpha;  // meaningful only for Kind::value

    static WallSolution value(Rational a) { return {Kind::value, a}; }
    static WallSolution none() { return {Kind::no_solution, Rational{}}; }
    static WallSolution everywhere() { return {Kind::all_alpha, Rational{}}; }
};

// Exact position of an alpha value relative to the wall set.
struct ChamberLocation {
    enum class Kind { inside, on_wall, out_of_range };

    Kind kind;
    std::optional<Chamber> chamber;  // set for Kind::inside
    std::optional<Wall> wall;        // set for Kind::on_wall
};

// One Milnor-Wood vs alpha-range disagreement found by mw_alpha_consistency
// (the sweep is expected to find none).
struct ConsistencyViolation {
    HiggsType higgs;
    TripleType normalized_triple;
    bool allowed;
    Rational alpha_m;

    friend bool operator==(const ConsistencyViolation&, const ConsistencyViolation&) = default;
};

struct ConsistencyReport {
    long long checked = 0;
    std::vector<ConsistencyViolation> violations;
};

// Solves mu_alpha(sub) = mu_alpha(t) for alpha. Degenerate classes (equal
// rank fractions) give all_alpha or no_solution depending on the degrees.
WallSolution wall_alpha(const SubtripleClass& sub, const TripleType& t);

// All walls in [0, alpha_M] (n1 > n2) or [0, cap] (n1 = n2), sorted by alpha,
// each with its full sorted witness list. cap is required exactly when
// n1 = n2 and must be positive.
std::vector<Wall> critical_values(const TripleType& t,
                                  std::optional<Rational> cap = std::nullopt);

// Open intervals between consecutive boundaries {0, walls..., top}.
std::vector<Chamber> chambers(const TripleType& t, std::optional<Rational> cap = std::nullopt);

// Classifies alpha against the wall set. Range endpoints that are not walls
// classify as inside the adjacent chamber (whose closure contains them).
ChamberLocation chamber_of(const TripleType& t, const Rational& alpha,
                           std::optional<Rational> cap = std::nullopt);

// Independent test oracle: scans every reduced a/b in [0, top] with
// b <= (n1+n2)^2 and keeps the values where some proper class admits an
// integer total degree solving the slope equality. Returns alphas only.
std::vector<Rational> oracle_critical_values(const TripleType& t,
                                             std::optional<Rational> cap = std::nullopt);

// For every (d_V, d_W) in the window: takes the minima-side triple
// (dualizing when n1 < n2) and checks is_allowed <=> 2g-2 <= alpha_M.
// Requires p != q (for p = q the range is unbounded and the check vacuous).
ConsistencyReport mw_alpha_consistency(int p, int q, SurfaceData g, const DegreeWindow& window,
                                       ExecPolicy policy = ExecPolicy::parallel);

std::ostream& operator<<(std::ostream& os, const Wall& w);
std::ostream& operator<<(std::ostream& os, const Chamber& c);

}  // namespace trimod
