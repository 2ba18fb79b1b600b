#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trimod/sweeps.hpp"

using namespace trimod;

namespace {

// Oversubscribe so the parallel merge paths actually run multi-threaded even
// on small machines.
struct ForceThreads {
    ForceThreads() {
#ifdef _OPENMP
        omp_set_num_threads(4);
#endif
    }
} force_threads;

}  // namespace

TEST_CASE("census parallel kernel matches the serial reference") {
    const SurfaceData g(2);
    for (auto [p, q] : {std::pair{1, 1}, {2, 3}, {3, 1}}) {
        const DegreeWindow window(-17, 13, -11, 19);
        const auto serial = census(p, q, g, window, ExecPolicy::serial);
        const auto parallel = census(p, q, g, window, ExecPolicy::parallel);
        CHECK(serial == parallel);
    }
}

TEST_CASE("consistency scan parallel kernel matches the serial reference") {
    for (auto [p, q] : {std::pair{2, 1}, {1, 3}, {4, 3}}) {
        const SurfaceData g(3);
        const DegreeWindow window(-7, 7, -7, 7);
        const auto serial = mw_alpha_consistency(p, q, g, window, ExecPolicy::serial);
        const auto parallel = mw_alpha_consistency(p, q, g, window, ExecPolicy::parallel);
        CHECK(serial.checked == parallel.checked);
        CHECK(serial.violations == parallel.violations);
        CHECK(serial.violations.empty());
    }
}

TEST_CASE("equivalence scan parallel kernel matches the serial reference") {
    const auto serial = wall_equivalence_scan(4, 3, Rational(6), ExecPolicy::serial);
    const auto parallel = wall_equivalence_scan(4, 3, Rational(6), ExecPolicy::parallel);
    CHECK(serial.checked == parallel.checked);
    CHECK(serial.mismatches.size() == parallel.mismatches.size());
    CHECK(serial.mismatches.empty());
    // grid bookkeeping: (1,1),(2,1),(3,1),(2,2) rank pairs x 7x7 degrees
    CHECK(serial.checked == 4 * 49);
}

TEST_CASE("vhs scan parallel kernel matches the serial reference") {
    const SurfaceData g(2);
    for (int m : {2, 3, 4}) {
        const auto serial = vhs_scan(m, 2, 1, g, ExecPolicy::serial);
        const auto parallel = vhs_scan(m, 2, 1, g, ExecPolicy::parallel);
        CHECK(serial.checked == parallel.checked);
        CHECK(serial.minima == parallel.minima);
        CHECK(serial.numerical == parallel.numerical);
        CHECK(serial.by_lemma == parallel.by_lemma);
        CHECK(serial.violation_indices == parallel.violation_indices);
    }
}

TEST_CASE("vhs grid decode covers the advertised bounds") {
    const long long total = vhs_scan_size(3, 2, 2);
    CHECK(total == 2LL * 8 * 125);
    bool saw_v_first = false, saw_w_first = false;
    for (long long idx = 0; idx < total; idx += 97) {
        const HodgeChain chain = vhs_scan_chain(idx, 3, 2, 2);
        REQUIRE(chain.length() == 3);
        for (const ChainPiece& piece : chain.pieces()) {
            CHECK(piece.rank >= 1);
            CHECK(piece.rank <= 2);
            CHECK(piece.degree >= -2);
            CHECK(piece.degree <= 2);
        }
        (chain.pieces()[0].side == PieceSide::V ? saw_v_first : saw_w_first) = true;
    }
    CHECK(saw_v_first);
    CHECK(saw_w_first);
}

TEST_CASE("sweep runs are deterministic across repeats") {
    const SurfaceData g(2);
    const DegreeWindow window(-9, 9, -9, 9);
    const auto first = census(2, 3, g, window, ExecPolicy::parallel);
    for (int i = 0; i < 3; ++i) {
        CHECK(census(2, 3, g, window, ExecPolicy::parallel) == first);
    }
}
