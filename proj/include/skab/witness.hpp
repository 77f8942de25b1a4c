#pragma once

// Witnesses for generic gaps. A gap v is certified by a monomial
//
//   x̃^a1 · ỹ^a2 · z̃^a3 · w̃^a4 · ∏ h_n^b_n · f1^c · f2^d · ∏ g_n^e_n · π^f
//
// whose valuation at P is v - 1 and whose pole order at P∞ is at most 2g - 2.
// Only the exponent vector is modelled; valuations and pole orders come from
// pole_order_table().

#include <optional>
#include <vector>

#include "skab/generic_gaps.hpp"

namespace skab {

struct WitnessVector {
    u64 a1 = 0, a2 = 0, a3 = 0, a4 = 0, f = 0;
    std::vector<u64> b;  // b[n-1] for n = 1 .. 2q0-2
    u64 c = 0, d = 0;
    std::vector<u64> e;  // e[n] for n = 0 .. q0-2

    bool operator==(const WitnessVector&) const = default;
};

/// All-zero vector with b and e sized for `p`.
WitnessVector zero_witness(const CurveParams& p);

/// Σ exponent × valuation at P.
u64 witness_valuation(const CurveParams& p, const WitnessVector& w);

/// Σ exponent × pole order at P∞.
u64 witness_pole_order(const CurveParams& p, const WitnessVector& w);

/// valuation == value - 1 and pole order ≤ 2g - 2.
bool witness_certifies(const CurveParams& p, const WitnessVector& w, u64 value);

/// Vector read directly off the record's family parameters (F1, F2, F3, F5,
/// F6); nullopt for F4 or when the read-off vector does not certify.
std::optional<WitnessVector> seed_witness(const CurveParams& p, const GapRecord& r);

/// Finds witnesses for any gap value of one curve. Seeds are tried first;
/// otherwise the search walks back through a table of least pole order per
/// valuation over [0, 2g - 1), built by the constructor. Supports s ≤ 3.
class WitnessFinder {
public:
    explicit WitnessFinder(const CurveParams& p);

    /// Throws no_witness if no vector satisfies both conditions.
    WitnessVector find(const GapRecord& r) const;

    /// Cheapest-pole vector with valuation value - 1, or nullopt.
    std::optional<WitnessVector> search(u64 value) const;

    const CurveParams& params() const noexcept { return params_; }

private:
    struct Block {
        u64 valuation;
        u64 pole;
        u64 WitnessVector::*scalar;  // null for indexed blocks
        std::vector<u64> WitnessVector::*indexed;
        std::size_t index;
    };

    CurveParams params_;
    std::vector<Block> blocks_;
    std::vector<u64> least_pole_;
    std::vector<std::uint8_t> last_block_;
};

/// One-off convenience wrapper around WitnessFinder.
WitnessVector gap_witness(const CurveParams& p, const GapRecord& r);

} // namespace skab
