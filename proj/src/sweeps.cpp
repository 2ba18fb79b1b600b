#include "trimod/sweeps.hpp"

#include <algorithm>

namespace trimod {

namespace {

// Minima-side triple of h, normalized to n1 >= n2 by duality. For equal
// slopes either side works; we take the c=0 side.
TripleType normalized_minima_triple(const HiggsType& h, SurfaceData g) {
    const MinimaType m = minima_type(h);
    const HiggsSide side = (m == MinimaType::b_zero) ? HiggsSide::b_zero : HiggsSide::c_zero;
    TripleType t = higgs_to_triple(h, g, side);
    if (t.n1 < t.n2) t = dual(t);
    return t;
}

bool consistency_holds(const HiggsType& h, SurfaceData g, TripleType* used,
                       Rational* alpha_m_out) {
    const TripleType t = normalized_minima_triple(h, g);
    const Rational am = alpha_max(t).value();
    if (used) *used = t;
    if (alpha_m_out) *alpha_m_out = am;
    return is_allowed(h, g) == (Rational(g.canonical_degree()) <= am);
}

std::vector<Rational> wall_alphas(const std::vector<Wall>& walls) {
    std::vector<Rational> alphas;
    alphas.reserve(walls.size());
    for (const Wall& w : walls) alphas.push_back(w.alpha);
    return alphas;
}

}  // namespace

std::vector<HiggsType> census(int p, int q, SurfaceData g, const DegreeWindow& window,
                              ExecPolicy policy) {
    if (p < 1 || q < 1) throw input_error("ranks must be positive");
    const long long dw_span = window.dw_hi - window.dw_lo + 1;
    const long long total = window.size();

    std::vector<HiggsType> result;
    if (policy == ExecPolicy::serial) {
        for (long long dv = window.dv_lo; dv <= window.dv_hi; ++dv) {
            for (long long dw = window.dw_lo; dw <= window.dw_hi; ++dw) {
                HiggsType h(p, q, dv, dw);
                if (is_allowed(h, g)) result.push_back(h);
            }
        }
        return result;
    }

    std::vector<unsigned char> allowed(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < total; ++idx) {
        const long long dv = window.dv_lo + idx / dw_span;
        const long long dw = window.dw_lo + idx % dw_span;
        allowed[static_cast<std::size_t>(idx)] = is_allowed(HiggsType(p, q, dv, dw), g) ? 1 : 0;
    }
    for (long long idx = 0; idx < total; ++idx) {
        if (!allowed[static_cast<std::size_t>(idx)]) continue;
        result.emplace_back(p, q, window.dv_lo + idx / dw_span, window.dw_lo + idx % dw_span);
    }
    return result;
}

ConsistencyReport mw_alpha_consistency(int p, int q, SurfaceData g, const DegreeWindow& window,
                                       ExecPolicy policy) {
    if (p < 1 || q < 1) throw input_error("ranks must be positive");
    if (p == q) {
        throw input_error("p = q has an unbounded alpha range; the check is vacuous");
    }

    const long long dw_span = window.dw_hi - window.dw_lo + 1;
    const long long total = window.size();
    ConsistencyReport report;
    report.checked = total;

    auto cell = [&](long long idx) {
        const long long dv = window.dv_lo + idx / dw_span;
        const long long dw = window.dw_lo + idx % dw_span;
        return HiggsType(p, q, dv, dw);
    };

    if (policy == ExecPolicy::serial) {
        for (long long idx = 0; idx < total; ++idx) {
            const HiggsType h = cell(idx);
            TripleType t(1, 1, 0, 0);
            Rational am;
            if (!consistency_holds(h, g, &t, &am)) {
                report.violations.push_back(
                    ConsistencyViolation{h, t, is_allowed(h, g), am});
            }
        }
        return report;
    }

    std::vector<unsigned char> bad(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < total; ++idx) {
        bad[static_cast<std::size_t>(idx)] = consistency_holds(cell(idx), g, nullptr, nullptr) ? 0 : 1;
    }
    for (long long idx = 0; idx < total; ++idx) {
        if (!bad[static_cast<std::size_t>(idx)]) continue;
        const HiggsType h = cell(idx);
        TripleType t(1, 1, 0, 0);
        Rational am;
        consistency_holds(h, g, &t, &am);
        report.violations.push_back(ConsistencyViolation{h, t, is_allowed(h, g), am});
    }
    return report;
}

EquivalenceReport wall_equivalence_scan(int max_rank_sum, long long d_abs,
                                        const Rational& cap_equal_ranks, ExecPolicy policy) {
    if (max_rank_sum < 2) throw input_error("rank sum bound must be at least 2");
    if (d_abs < 0) throw input_error("degree bound must be non-negative");

    std::vector<TripleType> grid;
    for (int n1 = 1; n1 <= max_rank_sum - 1; ++n1) {
        for (int n2 = 1; n2 <= n1 && n1 + n2 <= max_rank_sum; ++n2) {
            for (long long d1 = -d_abs; d1 <= d_abs; ++d1) {
                for (long long d2 = -d_abs; d2 <= d_abs; ++d2) {
                    grid.emplace_back(n1, n2, d1, d2);
                }
            }
        }
    }

    EquivalenceReport report;
    report.checked = static_cast<long long>(grid.size());

    auto mismatch_at = [&](std::size_t i) -> std::optional<EquivalenceMismatch> {
        const TripleType& t = grid[i];
        const std::optional<Rational> cap =
            (t.n1 == t.n2) ? std::optional<Rational>(cap_equal_ranks) : std::nullopt;
        auto formula = wall_alphas(critical_values(t, cap));
        auto oracle = oracle_critical_values(t, cap);
        if (formula == oracle) return std::nullopt;
        return EquivalenceMismatch{t, cap, std::move(formula), std::move(oracle)};
    };

    if (policy == ExecPolicy::serial) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (auto m = mismatch_at(i)) report.mismatches.push_back(std::move(*m));
        }
        return report;
    }

    std::vector<unsigned char> bad(grid.size(), 0);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(grid.size()); ++i) {
        bad[static_cast<std::size_t>(i)] = mismatch_at(static_cast<std::size_t>(i)) ? 1 : 0;
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (bad[i]) report.mismatches.push_back(std::move(*mismatch_at(i)));
    }
    return report;
}

long long vhs_scan_size(int length, int max_rank, long long d_abs) {
    if (length < 1 || max_rank < 1 || d_abs < 0) throw input_error("bad chain grid bounds");
    long long size = 2;  // starting side
    for (int i = 0; i < length; ++i) size *= max_rank;
    for (int i = 0; i < length; ++i) size *= 2 * d_abs + 1;
    return size;
}

HodgeChain vhs_scan_chain(long long index, int length, int max_rank, long long d_abs) {
    const long long deg_span = 2 * d_abs + 1;
    long long rest = index;
    const PieceSide first = (rest % 2 == 0) ? PieceSide::V : PieceSide::W;
    rest /= 2;

    std::vector<ChainPiece> pieces(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        pieces[static_cast<std::size_t>(i)].rank = 1 + static_cast<int>(rest % max_rank);
        rest /= max_rank;
    }
    for (int i = 0; i < length; ++i) {
        pieces[static_cast<std::size_t>(i)].degree = -d_abs + rest % deg_span;
        rest /= deg_span;
    }
    for (int i = 0; i < length; ++i) {
        const bool even = (i % 2 == 0);
        pieces[static_cast<std::size_t>(i)].side =
            (even == (first == PieceSide::V)) ? PieceSide::V : PieceSide::W;
    }
    return HodgeChain(std::move(pieces));
}

VhsScanReport vhs_scan(int length, int max_rank, long long d_abs, SurfaceData g,
                       ExecPolicy policy) {
    const long long total = vhs_scan_size(length, max_rank, d_abs);
    VhsScanReport report;
    report.checked = total;

    auto tally = [&](long long idx, long long& minima, long long& numerical, long long& by_lemma,
                     bool& violation) {
        const HodgeChain chain = vhs_scan_chain(idx, length, max_rank, d_abs);
        const MinimaVerdict v = classify_chain(chain, g);
        switch (v.kind) {
            case MinimaVerdict::Kind::minimum: ++minima; break;
            case MinimaVerdict::Kind::not_minimum_numerical: ++numerical; break;
            case MinimaVerdict::Kind::not_minimum_by_lemma: ++by_lemma; break;
        }
        const bool is_min = v.kind == MinimaVerdict::Kind::minimum;
        violation = (length <= 2) ? !is_min : is_min;
    };

    if (policy == ExecPolicy::serial) {
        for (long long idx = 0; idx < total; ++idx) {
            bool violation = false;
            tally(idx, report.minima, report.numerical, report.by_lemma, violation);
            if (violation) report.violation_indices.push_back(idx);
        }
        return report;
    }

    long long minima = 0, numerical = 0, by_lemma = 0, violations = 0;
#pragma omp parallel for schedule(static) reduction(+ : minima, numerical, by_lemma, violations)
    for (long long idx = 0; idx < total; ++idx) {
        bool violation = false;
        tally(idx, minima, numerical, by_lemma, violation);
        if (violation) ++violations;
    }
    report.minima = minima;
    report.numerical = numerical;
    report.by_lemma = by_lemma;
    if (violations > 0) {
        for (long long idx = 0; idx < total; ++idx) {
            long long a = 0, b = 0, c = 0;
            bool violation = false;
            tally(idx, a, b, c, violation);
            if (violation) report.violation_indices.push_back(idx);
        }
    }
    return report;
}

}  // namespace trimod
