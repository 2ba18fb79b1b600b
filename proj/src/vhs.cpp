#include "trimod/vhs.hpp"

#include <ostream>

namespace trimod {

HodgeChain::HodgeChain(std::vector<ChainPiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw input_error("chain needs at least one piece");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (pieces_[i].rank < 1) throw input_error("chain pieces need positive rank");
        if (i > 0 && pieces_[i].side == pieces_[i - 1].side) {
            throw input_error("chain sides must alternate between V and W");
        }
    }
}

std::vector<GradedPiece> adjoint_grading(const HodgeChain& chain) {
    const auto& f = chain.pieces();
    const int m = chain.length();
    std::vector<GradedPiece> grading;
    grading.reserve(2 * m - 1);
    for (int k = -(m - 1); k <= m - 1; ++k) {
        long long rank = 0;
        long long degree = 0;
        // U_k = sum of Hom(F_j, F_i) over i - j = k (1-based chain indices).
        for (int j = 0; j < m; ++j) {
            const int i = j + k;
            if (i < 0 || i >= m) continue;
            rank += static_cast<long long>(f[i].rank) * f[j].rank;
            degree += f[j].rank * f[i].degree - f[i].rank * f[j].degree;
        }
        grading.push_back(GradedPiece{k, rank, degree});
    }
    return grading;
}

namespace {

GradedPiece graded_at(const std::vector<GradedPiece>& grading, int m, int k) {
    if (k < -(m - 1) || k > m - 1) return GradedPiece{k, 0, 0};
    return grading[static_cast<std::size_t>(k + m - 1)];
}

bool iso_feasible_at(const std::vector<GradedPiece>& grading, int m, int k, SurfaceData g) {
    const GradedPiece uk = graded_at(grading, m, k);
    const GradedPiece uk1 = graded_at(grading, m, k + 1);
    if (uk.rank == 0 && uk1.rank == 0) return true;
    return uk.rank == uk1.rank &&
           uk.degree == uk1.degree + static_cast<long long>(g.canonical_degree()) * uk1.rank;
}

}  // namespace

bool iso_feasible(const HodgeChain& chain, int k, SurfaceData g) {
    return iso_feasible_at(adjoint_grading(chain), chain.length(), k, g);
}

MinimaVerdict classify_chain(const HodgeChain& chain, SurfaceData g) {
    const int m = chain.length();
    if (m <= 2) return MinimaVerdict::minimum();
    const auto grading = adjoint_grading(chain);
    for (int k = 2; k <= m - 1; k += 2) {
        // U_k != 0 for every k <= m-1, so the pair (U_k, U_{k+1}) is nonzero.
        if (!iso_feasible_at(grading, m, k, g)) {
            return MinimaVerdict::numerical(k);
        }
    }
    return MinimaVerdict::by_lemma();
}

HiggsType chain_to_higgs(const HodgeChain& chain) {
    int p = 0, q = 0;
    long long dv = 0, dw = 0;
    for (const ChainPiece& piece : chain.pieces()) {
        if (piece.side == PieceSide::V) {
            p += piece.rank;
            dv += piece.degree;
        } else {
            q += piece.rank;
            dw += piece.degree;
        }
    }
    if (p == 0 || q == 0) {
        throw input_error("one-sided chain is not a U(p,q) datum");
    }
    return HiggsType(p, q, dv, dw);
}

std::ostream& operator<<(std::ostream& os, const MinimaVerdict& v) {
    switch (v.kind) {
        case MinimaVerdict::Kind::minimum: return os << "Minimum";
        case MinimaVerdict::Kind::not_minimum_numerical:
            return os << "NotMinimumNumerical(k=" << v.obstruction_k << ")";
        case MinimaVerdict::Kind::not_minimum_by_lemma: return os << "NotMinimumByLemma";
    }
    return os;
}

}  // namespace trimod
