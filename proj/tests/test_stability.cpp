#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trimod/stability.hpp"

using namespace trimod;

TEST_CASE("slope") {
    CHECK(slope(2, 3) == Rational(3, 2));
    CHECK(slope(5, 0) == Rational(0));
    CHECK(slope(3, -6) == Rational(-2));
    CHECK_THROWS_AS(slope(0, 1), input_error);
}

TEST_CASE("alpha_slope worked values") {
    const TripleType t(2, 1, 3, 0);
    CHECK(alpha_slope(t, Rational(0)) == Rational(1));
    CHECK(alpha_slope(t, Rational(3)) == Rational(2));
    CHECK(alpha_slope(TripleType(2, 3, 4, 0), Rational(2)) == Rational(2));
    // negative alpha is plain arithmetic
    CHECK(alpha_slope(t, Rational(-3)) == Rational(0));
}

TEST_CASE("alpha_slope is affine in alpha with slope n2/(n1+n2)") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> rank(1, 5);
    std::uniform_int_distribution<long long> deg(-30, 30);
    std::uniform_int_distribution<long long> coef(-12, 12);
    for (int i = 0; i < 1500; ++i) {
        const TripleType t(rank(rng), rank(rng), deg(rng), deg(rng));
        const Rational a(coef(rng), 1 + static_cast<long long>(rng() % 7));
        const Rational b(coef(rng), 1 + static_cast<long long>(rng() % 7));
        const Rational rate(t.n2, t.n1 + t.n2);
        CHECK(alpha_slope(t, a) - alpha_slope(t, b) == (a - b) * rate);
    }
}

TEST_CASE("alpha_max worked values") {
    CHECK(alpha_max(TripleType(2, 1, 3, 0)) == AlphaBound::finite(Rational(6)));
    CHECK(alpha_max(TripleType(1, 1, 5, 2)) == AlphaBound::unbounded());
    CHECK(alpha_max(TripleType(2, 1, -3, -2)) == AlphaBound::finite(Rational(2)));
    // negative when mu1 < mu2: every alpha range is empty
    CHECK(alpha_max(TripleType(2, 1, 0, 2)).value() < Rational(0));
    CHECK_THROWS_AS(alpha_max(TripleType(1, 2, 2, 3)), input_error);
    CHECK_THROWS_AS(alpha_max(TripleType(2, 0, 3, 0)), input_error);
}

TEST_CASE("dual is an involution") {
    CHECK(dual(TripleType(1, 2, 2, 3)) == TripleType(2, 1, -3, -2));
    CHECK(dual(dual(TripleType(3, 2, 7, -1))) == TripleType(3, 2, 7, -1));
    CHECK(dual(TripleType(1, 1, 0, 0)) == TripleType(1, 1, 0, 0));
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> rank(1, 6);
    std::uniform_int_distribution<long long> deg(-40, 40);
    for (int i = 0; i < 2000; ++i) {
        const TripleType t(rank(rng), rank(rng), deg(rng), deg(rng));
        CHECK(dual(dual(t)) == t);
    }
}

TEST_CASE("subtriple_margin worked values") {
    CHECK(subtriple_margin(SubtripleClass(1, 1, 2), TripleType(2, 1, 3, 0), Rational(2)) ==
          Rational(-1, 3));
    CHECK(subtriple_margin(SubtripleClass(1, 0, 1), TripleType(2, 1, 3, 0), Rational(0)) ==
          Rational(0));
    // slope-proportional class: margin vanishes for every alpha
    for (long long a = -4; a <= 8; ++a) {
        CHECK(subtriple_margin(SubtripleClass(1, 1, 0), TripleType(2, 2, 0, 0), Rational(a)) ==
              Rational(0));
    }
    // the (1,0,0) class picks up the ambient alpha-term: margin alpha/2
    for (long long a = -4; a <= 8; ++a) {
        CHECK(subtriple_margin(SubtripleClass(1, 0, 0), TripleType(2, 2, 0, 0), Rational(a)) ==
              Rational(a, 2));
    }
}

TEST_CASE("subtriple_margin rejects non-proper classes") {
    const TripleType t(2, 1, 3, 0);
    CHECK_THROWS_AS(subtriple_margin(SubtripleClass(0, 0, 0), t, Rational(1)), input_error);
    CHECK_THROWS_AS(subtriple_margin(SubtripleClass(2, 1, 1), t, Rational(1)), input_error);
    CHECK_THROWS_AS(subtriple_margin(SubtripleClass(3, 0, 0), t, Rational(1)), input_error);
    CHECK_THROWS_AS(subtriple_margin(SubtripleClass(0, 2, 0), t, Rational(1)), input_error);
}

TEST_CASE("weighted sub/quotient margins cancel exactly") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> rank(1, 5);
    std::uniform_int_distribution<long long> deg(-25, 25);
    std::uniform_int_distribution<long long> anum(-10, 10);
    int done = 0;
    while (done < 2000) {
        const TripleType t(rank(rng), rank(rng), deg(rng), deg(rng));
        const int n1p = static_cast<int>(rng() % (t.n1 + 1));
        const int n2p = static_cast<int>(rng() % (t.n2 + 1));
        if ((n1p == 0 && n2p == 0) || (n1p == t.n1 && n2p == t.n2)) continue;
        const SubtripleClass sub(n1p, n2p, deg(rng));
        const SubtripleClass comp(t.n1 - n1p, t.n2 - n2p, t.d1 + t.d2 - sub.dtot);
        const Rational alpha(anum(rng), 1 + static_cast<long long>(rng() % 5));
        const int n = t.n1 + t.n2;
        const Rational w_sub(sub.n1p + sub.n2p, n);
        const Rational w_comp(n - sub.n1p - sub.n2p, n);
        CHECK(w_sub * subtriple_margin(sub, t, alpha) +
                  w_comp * subtriple_margin(comp, t, alpha) ==
              Rational(0));
        ++done;
    }
}

// The full-E1 class (n1, 0, d1) has zero margin exactly at alpha = mu1 - mu2,
// and the class (n1-n2, 0, d1-d2) has zero margin exactly at alpha_M.
TEST_CASE("distinguished classes pin the range ends") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<long long> deg(-20, 20);
    for (int i = 0; i < 2000; ++i) {
        const int n2 = 1 + static_cast<int>(rng() % 3);
        const int n1 = n2 + 1 + static_cast<int>(rng() % 3);
        const TripleType t(n1, n2, deg(rng), deg(rng));
        const Rational mu_gap = slope(t.n1, t.d1) - slope(t.n2, t.d2);
        const Rational am = alpha_max(t).value();

        CHECK(subtriple_margin(SubtripleClass(t.n1, 0, t.d1), t, mu_gap) == Rational(0));
        CHECK(subtriple_margin(SubtripleClass(t.n1 - t.n2, 0, t.d1 - t.d2), t, am) ==
              Rational(0));
        if (mu_gap != am) {
            CHECK(subtriple_margin(SubtripleClass(t.n1, 0, t.d1), t, am) != Rational(0));
        }
    }
    // worked instance: t=(2,1,3,0) has mu gap 3/2 and alpha_M 6
    const TripleType t(2, 1, 3, 0);
    CHECK(subtriple_margin(SubtripleClass(2, 0, 3), t, Rational(3, 2)) == Rational(0));
    CHECK(subtriple_margin(SubtripleClass(1, 0, 3), t, Rational(6)) == Rational(0));
}
