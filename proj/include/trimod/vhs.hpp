#pragma once

#include <iosfwd>
#include <vector>

#include "trimod/invariants.hpp"

namespace trimod {

// Which summand of E = V + W a chain piece lives in.
enum class PieceSide { V, W };

struct ChainPiece {
    int rank;
    long long degree;
    PieceSide side;

    friend bool operator==(const ChainPiece&, const ChainPiece&) = default;
};

// A variation-of-Hodge-structure chain E = F_1 + ... + F_m with the Higgs
// field mapping F_k into F_{k+1} tensor K. Sides must strictly alternate
// (the field exchanges V and W summands); all ranks positive, m >= 1.
class HodgeChain {
  public:
    explicit HodgeChain(std::vector<ChainPiece> pieces);

    const std::vector<ChainPiece>& pieces() const { return pieces_; }
    int length() const { return static_cast<int>(pieces_.size()); }

  private:
    std::vector<ChainPiece> pieces_;
};

// Weight-k part of End(E): U_k = sum over i-j=k of Hom(F_j, F_i).
struct GradedPiece {
    int k;
    long long rank;
    long long degree;

    friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

// Outcome of the minima test for a chain.
struct MinimaVerdict {
    enum class Kind { minimum, not_minimum_numerical, not_minimum_by_lemma };

    Kind kind;
    int obstruction_k;  // smallest offending even k >= 2; meaningful only for numerical

    static MinimaVerdict minimum() { return {Kind::minimum, 0}; }
    static MinimaVerdict numerical(int k) { return {Kind::not_minimum_numerical, k}; }
    static MinimaVerdict by_lemma() { return {Kind::not_minimum_by_lemma, 0}; }

    friend bool operator==(const MinimaVerdict&, const MinimaVerdict&) = default;
};

// Ranks and degrees of U_k for k in [-(m-1), m-1], ascending in k.
std::vector<GradedPiece> adjoint_grading(const HodgeChain& chain);

// Necessary rank/degree conditions for ad(Phi): U_k -> U_{k+1} tensor K to be
// an isomorphism: equal ranks and deg U_k = deg U_{k+1} + (2g-2) rk U_{k+1}.
// Vacuously true when both pieces vanish.
bool iso_feasible(const HodgeChain& chain, int k, SurfaceData g);

// m <= 2 is always a minimum. For m >= 3 the chain is never a minimum: the
// verdict reports the smallest even k >= 2 whose feasibility test fails, or
// falls back to the lemma when every numerical test passes.
MinimaVerdict classify_chain(const HodgeChain& chain, SurfaceData g);

// V/W rank and degree totals of the chain. One-sided chains are rejected
// (they do not give a U(p,q) datum with p, q >= 1).
HiggsType chain_to_higgs(const HodgeChain& chain);

std::ostream& operator<<(std::ostream& os, const MinimaVerdict& v);

}  // namespace trimod
