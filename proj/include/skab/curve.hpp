#pragma once

// Parameters of the Skabelund curve over F_{q^4} (q = 2·q0², q0 = 2^s) and
// the closed-form Weierstrass semigroup data at its F_{q^4}-rational points.

#include <vector>

#include "skab/semigroup.hpp"

namespace skab {

inline constexpr unsigned kMaxS = 6;

struct CurveParams {
    unsigned s = 1;
    u64 q0 = 2;
    u64 q = 8;
    u64 genus = 196;          // q(q-1)²/2
    u64 two_g_minus_2 = 390;  // canonical degree

    bool operator==(const CurveParams&) const = default;
};

/// Throws unsupported_s unless 1 ≤ s ≤ kMaxS.
CurveParams make_params(unsigned s);

/// Order of vanishing at the base point P and pole order at P∞ of one of the
/// building-block functions used to realise gaps.
struct BlockOrders {
    u64 valuation = 0;
    u64 pole = 0;

    bool operator==(const BlockOrders&) const = default;
};

struct PoleOrderTable {
    BlockOrders x, y, z, w, pi, f1, f2;
    std::vector<BlockOrders> h;  // h[n-1] for n = 1 .. 2q0-2
    std::vector<BlockOrders> g;  // g[n] for n = 0 .. q0-2
};

PoleOrderTable pole_order_table(const CurveParams& p);

// ---- F_q-rational points ------------------------------------------------

/// The five generators q²-2q0q+q < q²-q0q+q0 < q²-q+2q0 < q² < q²+1.
GeneratorSet rational_generators(const CurveParams& p);

/// Sorted Apéry set {h·g1 + i·g2 + j·g3 + k·g4} over the box
/// h ≤ 1, i < q0, j ≤ q-2q0, k < q0. Throws duplicate_residue if two box
/// points share a class modulo g0.
std::vector<u64> rational_apery(const CurveParams& p);

// ---- F_{q^4}-rational points outside F_q ---------------------------------

/// g0..g4 together with f_0..f_{2q0-2} and h_0..h_{q0-2}, as a set.
GeneratorSet quartic_generators(const CurveParams& p);

/// Multiplicity q²-q+1 of the quartic semigroup.
u64 quartic_multiplicity(const CurveParams& p);

/// Largest index handled by phi1; phi2 covers the rest of [0, g0).
u64 phi_split_point(const CurveParams& p);

/// Defined for 0 ≤ i ≤ q(q-2)/2; throws out_of_domain otherwise.
u64 phi1(const CurveParams& p, u64 i);

/// Defined for q(q-2)/2 < i < g0; throws out_of_domain otherwise.
u64 phi2(const CurveParams& p, u64 i);

/// phi1 below the split point, phi2 above it; total on [0, g0).
u64 phi(const CurveParams& p, u64 i);

/// Sorted {phi(i)·g0 + i : 0 ≤ i < g0}. Throws sum_mismatch unless the phi
/// values add up to the curve genus.
std::vector<u64> quartic_apery(const CurveParams& p);

} // namespace skab
