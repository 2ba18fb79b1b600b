#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "trimod/chambers.hpp"

using namespace trimod;

namespace {

std::vector<Rational> alphas_of(const std::vector<Wall>& walls) {
    std::vector<Rational> out;
    for (const Wall& w : walls) out.push_back(w.alpha);
    return out;
}

std::vector<Rational> rats(std::initializer_list<Rational> values) { return values; }

// Test-only scan over [0, top]: like oracle_critical_values but without the
// n1 >= n2 normalization, so duality can be checked on the raw dual triple.
std::vector<Rational> raw_scan(const TripleType& t, const Rational& top) {
    std::vector<Rational> found;
    const long long n = t.n1 + t.n2;
    for (long long b = 1; b <= n * n; ++b) {
        const long long a_hi = (top * Rational(b)).floor();
        for (long long a = 0; a <= a_hi; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const Rational alpha(a, b);
            const Rational ambient = alpha_slope(t, alpha);
            for (int n1p = 0; n1p <= t.n1; ++n1p) {
                for (int n2p = 0; n2p <= t.n2; ++n2p) {
                    if (n1p == 0 && n2p == 0) continue;
                    if (n1p == t.n1 && n2p == t.n2) continue;
                    const long long np = n1p + n2p;
                    if (n2p * n == t.n2 * np) continue;  // alpha-independent
                    const Rational dp = Rational(np) * ambient - alpha * Rational(n2p);
                    if (dp.is_integer()) {
                        found.push_back(alpha);
                        n1p = t.n1 + 1;  // break both rank loops
                        break;
                    }
                }
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace

TEST_CASE("wall_alpha worked values") {
    const TripleType t(2, 1, 3, 0);
    auto sol = wall_alpha(SubtripleClass(1, 0, 1), t);
    CHECK(sol.kind == WallSolution::Kind::value);
    CHECK(sol.alpha == Rational(0));

    sol = wall_alpha(SubtripleClass(1, 1, 1), t);
    CHECK(sol.kind == WallSolution::Kind::value);
    CHECK(sol.alpha == Rational(3));

    sol = wall_alpha(SubtripleClass(1, 1, 0), TripleType(2, 2, 0, 0));
    CHECK(sol.kind == WallSolution::Kind::all_alpha);

    sol = wall_alpha(SubtripleClass(1, 1, 1), TripleType(2, 2, 0, 0));
    CHECK(sol.kind == WallSolution::Kind::no_solution);

    CHECK_THROWS_AS(wall_alpha(SubtripleClass(2, 1, 0), t), input_error);
}

TEST_CASE("critical_values worked instance t=(2,1,3,0)") {
    const TripleType t(2, 1, 3, 0);
    const auto walls = critical_values(t);
    CHECK(alphas_of(walls) ==
          rats({Rational(0), Rational(3, 2), Rational(3), Rational(9, 2), Rational(6)}));
    for (const Wall& w : walls) {
        CHECK_FALSE(w.witnesses.empty());
        for (const SubtripleClass& s : w.witnesses) {
            CHECK(subtriple_margin(s, t, w.alpha) == Rational(0));
        }
    }
}

TEST_CASE("critical_values cap cases") {
    CHECK(alphas_of(critical_values(TripleType(1, 1, 0, 0), Rational(4))) ==
          rats({Rational(0), Rational(2), Rational(4)}));
    // alpha_M = 0: the single-point range keeps only witnessed 0
    CHECK(alphas_of(critical_values(TripleType(2, 1, 0, 0))) == rats({Rational(0)}));
    // 0 is not always witnessed
    CHECK(alphas_of(critical_values(TripleType(2, 1, 1, 0))) ==
          rats({Rational(1, 2), Rational(2)}));
    // negative alpha_M: empty range
    CHECK(critical_values(TripleType(2, 1, 0, 2)).empty());
}

TEST_CASE("critical_values input validation") {
    CHECK_THROWS_AS(critical_values(TripleType(1, 2, 2, 3)), input_error);
    CHECK_THROWS_AS(critical_values(TripleType(2, 0, 3, 0)), input_error);
    CHECK_THROWS_AS(critical_values(TripleType(1, 1, 0, 0)), input_error);
    CHECK_THROWS_AS(critical_values(TripleType(1, 1, 0, 0), Rational(0)), input_error);
    CHECK_THROWS_AS(critical_values(TripleType(1, 1, 0, 0), Rational(-2)), input_error);
    CHECK_THROWS_AS(critical_values(TripleType(2, 1, 3, 0), Rational(4)), input_error);
}

TEST_CASE("chambers worked instances") {
    const auto got = chambers(TripleType(2, 1, 3, 0));
    REQUIRE(got.size() == 4);
    CHECK(got[0] == Chamber{Rational(0), Rational(3, 2)});
    CHECK(got[1] == Chamber{Rational(3, 2), Rational(3)});
    CHECK(got[2] == Chamber{Rational(3), Rational(9, 2)});
    CHECK(got[3] == Chamber{Rational(9, 2), Rational(6)});

    CHECK(chambers(TripleType(2, 1, 0, 0)).empty());

    const auto capped = chambers(TripleType(1, 1, 0, 0), Rational(4));
    REQUIRE(capped.size() == 2);
    CHECK(capped[0] == Chamber{Rational(0), Rational(2)});
    CHECK(capped[1] == Chamber{Rational(2), Rational(4)});
}

TEST_CASE("chamber_of classification") {
    const TripleType t(2, 1, 3, 0);
    auto loc = chamber_of(t, Rational(2));
    CHECK(loc.kind == ChamberLocation::Kind::inside);
    CHECK(*loc.chamber == Chamber{Rational(3, 2), Rational(3)});

    loc = chamber_of(t, Rational(3));
    CHECK(loc.kind == ChamberLocation::Kind::on_wall);
    CHECK(loc.wall->alpha == Rational(3));

    loc = chamber_of(t, Rational(7));
    CHECK(loc.kind == ChamberLocation::Kind::out_of_range);
    CHECK(chamber_of(t, Rational(-1)).kind == ChamberLocation::Kind::out_of_range);

    // range endpoint that is not a wall: inside the adjacent chamber
    loc = chamber_of(TripleType(2, 1, 1, 0), Rational(0));
    CHECK(loc.kind == ChamberLocation::Kind::inside);
    CHECK(*loc.chamber == Chamber{Rational(0), Rational(1, 2)});
}

TEST_CASE("oracle_critical_values worked instances") {
    CHECK(oracle_critical_values(TripleType(2, 1, 3, 0)) ==
          rats({Rational(0), Rational(3, 2), Rational(3), Rational(9, 2), Rational(6)}));
    CHECK(oracle_critical_values(TripleType(2, 1, 0, 0)) == rats({Rational(0)}));
    CHECK(oracle_critical_values(TripleType(1, 1, 0, 0), Rational(4)) ==
          rats({Rational(0), Rational(2), Rational(4)}));
}

TEST_CASE("formula matches oracle on a spot grid") {
    for (int n1 = 1; n1 <= 3; ++n1) {
        for (int n2 = 1; n2 <= n1; ++n2) {
            for (long long d1 = -3; d1 <= 3; ++d1) {
                for (long long d2 = -3; d2 <= 3; ++d2) {
                    const TripleType t(n1, n2, d1, d2);
                    const std::optional<Rational> cap =
                        n1 == n2 ? std::optional<Rational>(Rational(5)) : std::nullopt;
                    CHECK(alphas_of(critical_values(t, cap)) == oracle_critical_values(t, cap));
                }
            }
        }
    }
}

TEST_CASE("every witness margins to zero at its wall, across a grid") {
    for (int n1 = 1; n1 <= 3; ++n1) {
        for (int n2 = 1; n2 <= n1; ++n2) {
            for (long long d1 = -2; d1 <= 2; ++d1) {
                for (long long d2 = -2; d2 <= 2; ++d2) {
                    const TripleType t(n1, n2, d1, d2);
                    const std::optional<Rational> cap =
                        n1 == n2 ? std::optional<Rational>(Rational(4)) : std::nullopt;
                    for (const Wall& w : critical_values(t, cap)) {
                        REQUIRE_FALSE(w.witnesses.empty());
                        for (const SubtripleClass& s : w.witnesses) {
                            CHECK(subtriple_margin(s, t, w.alpha) == Rational(0));
                            const auto sol = wall_alpha(s, t);
                            CHECK(sol.kind == WallSolution::Kind::value);
                            CHECK(sol.alpha == w.alpha);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("chamber_of and oracle propagate engine preconditions") {
    CHECK_THROWS_AS(chamber_of(TripleType(1, 2, 2, 3), Rational(1)), input_error);
    CHECK_THROWS_AS(chamber_of(TripleType(1, 1, 0, 0), Rational(1)), input_error);
    CHECK_THROWS_AS(chamber_of(TripleType(2, 1, 3, 0), Rational(1), Rational(5)), input_error);
    CHECK_THROWS_AS(oracle_critical_values(TripleType(1, 2, 2, 3)), input_error);
    CHECK_THROWS_AS(oracle_critical_values(TripleType(1, 1, 0, 0)), input_error);
    CHECK_THROWS_AS(chambers(TripleType(1, 1, 0, 0), Rational(-1)), input_error);
}

TEST_CASE("chamber midpoints admit no alpha-dependent zero-margin class") {
    for (const TripleType& t : {TripleType(2, 1, 3, 0), TripleType(3, 2, 4, -1),
                                TripleType(3, 1, 5, 1)}) {
        const long long n = t.n1 + t.n2;
        for (const Chamber& c : chambers(t)) {
            const Rational mid = (c.lower + c.upper) / Rational(2);
            for (int n1p = 0; n1p <= t.n1; ++n1p) {
                for (int n2p = 0; n2p <= t.n2; ++n2p) {
                    if ((n1p == 0 && n2p == 0) || (n1p == t.n1 && n2p == t.n2)) continue;
                    const long long np = n1p + n2p;
                    if (n2p * n - t.n2 * np == 0) continue;  // alpha-independent class
                    // dtot solving the midpoint equality must not be integral
                    const Rational dp =
                        Rational(np) * alpha_slope(t, mid) - mid * Rational(n2p);
                    CHECK_FALSE(dp.is_integer());
                }
            }
        }
    }
}

TEST_CASE("wall denominators divide a witness denominator bound") {
    for (const TripleType& t : {TripleType(2, 1, 3, 0), TripleType(3, 2, 4, -1),
                                TripleType(4, 1, 5, 1)}) {
        const long long n = t.n1 + t.n2;
        for (const Wall& w : critical_values(t)) {
            CHECK(w.alpha.den() <= n * n);
            bool divides_some = false;
            for (const SubtripleClass& s : w.witnesses) {
                const long long denom = s.n2p * n - t.n2 * (s.n1p + s.n2p);
                if (denom != 0 && std::llabs(denom) % w.alpha.den() == 0) {
                    divides_some = true;
                }
            }
            CHECK(divides_some);
        }
    }
}

TEST_CASE("twist invariance of alpha_max and wall sets") {
    for (int n1 = 1; n1 <= 3; ++n1) {
        for (int n2 = 1; n2 <= n1; ++n2) {
            for (long long d1 = -2; d1 <= 2; ++d1) {
                for (long long d2 = -2; d2 <= 2; ++d2) {
                    const TripleType t(n1, n2, d1, d2);
                    const std::optional<Rational> cap =
                        n1 == n2 ? std::optional<Rational>(Rational(6)) : std::nullopt;
                    const auto base = alphas_of(critical_values(t, cap));
                    for (long long c : {-3LL, 1LL, 4LL}) {
                        const TripleType shifted(n1, n2, d1 + c * n1, d2 + c * n2);
                        if (n1 != n2) {
                            CHECK(alpha_max(shifted) == alpha_max(t));
                        }
                        CHECK(alphas_of(critical_values(shifted, cap)) == base);
                    }
                }
            }
        }
    }
}

TEST_CASE("duality preserves wall sets") {
    for (int n1 = 2; n1 <= 3; ++n1) {
        for (int n2 = 1; n2 < n1; ++n2) {
            for (long long d1 = -2; d1 <= 2; ++d1) {
                for (long long d2 = -2; d2 <= 2; ++d2) {
                    const TripleType t(n1, n2, d1, d2);
                    const Rational top = alpha_max(t).value();
                    if (top < Rational(0)) continue;
                    // the raw scan on the (n1 < n2) dual agrees with the
                    // normalized engine on t
                    CHECK(alphas_of(critical_values(t)) == raw_scan(dual(t), top));
                }
            }
        }
    }
    // n1 = n2: both the triple and its dual go through the engine directly
    for (long long d1 = -2; d1 <= 2; ++d1) {
        for (long long d2 = -2; d2 <= 2; ++d2) {
            const TripleType t(2, 2, d1, d2);
            const auto cap = std::optional<Rational>(Rational(5));
            CHECK(alphas_of(critical_values(t, cap)) ==
                  alphas_of(critical_values(dual(t), cap)));
        }
    }
}

TEST_CASE("mw_alpha_consistency worked windows") {
    SUBCASE("p=2 q=1 genus=2") {
        const auto report =
            mw_alpha_consistency(2, 1, SurfaceData(2), DegreeWindow(-5, 5, -5, 5));
        CHECK(report.checked == 121);
        CHECK(report.violations.empty());
    }
    SUBCASE("p=3 q=1 genus=3") {
        const auto report =
            mw_alpha_consistency(3, 1, SurfaceData(3), DegreeWindow(-4, 4, -4, 4));
        CHECK(report.checked == 81);
        CHECK(report.violations.empty());
    }
    SUBCASE("boundary instance hits both equalities") {
        const HiggsType h(2, 1, 3, 0);
        const SurfaceData g(2);
        CHECK(mw_value(h) == mw_bound(2, 1, g));
        // minima side is b=0; its dual-normalized triple is (2,1,-3,-2)
        const TripleType t = dual(higgs_to_triple(h, g, HiggsSide::b_zero));
        CHECK(t == TripleType(2, 1, -3, -2));
        CHECK(alpha_max(t) == AlphaBound::finite(Rational(2)));
        CHECK(Rational(g.canonical_degree()) == alpha_max(t).value());
    }
    SUBCASE("p=q rejected as vacuous") {
        CHECK_THROWS_AS(
            mw_alpha_consistency(2, 2, SurfaceData(2), DegreeWindow(0, 1, 0, 1)),
            input_error);
    }
}
