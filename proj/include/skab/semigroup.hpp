#pragma once

// Numerical semigroups in Apéry normal form.
//
// A semigroup S ⊆ ℕ with multiplicity m is fully described by its Apéry
// array: apery[r] is the least element of S congruent to r mod m. Membership,
// gaps, genus and conductor all follow from that array.

#include <cstdint>
#include <span>
#include <vector>

#include "skab/checked.hpp"

namespace skab {

/// Strictly increasing list of positive integers with gcd 1.
class GeneratorSet {
public:
    std::span<const u64> values() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    u64 min() const noexcept { return gens_.front(); }
    u64 operator[](std::size_t i) const noexcept { return gens_[i]; }

    bool operator==(const GeneratorSet&) const = default;

private:
    explicit GeneratorSet(std::vector<u64> gens) : gens_(std::move(gens)) {}
    friend GeneratorSet normalize_generators(std::span<const u64> raw);

    std::vector<u64> gens_;
};

struct SemigroupProfile {
    u64 multiplicity = 1;
    std::vector<u64> apery{0};
    u64 genus = 0;
    u64 conductor = 0;
    std::int64_t frobenius = -1;  // -1 when the semigroup is all of ℕ

    bool operator==(const SemigroupProfile&) const = default;
};

/// Sorted gaps of a semigroup; every gap is below `bound`.
struct GapSet {
    std::vector<u64> gaps;
    u64 bound = 0;

    bool operator==(const GapSet&) const = default;
};

/// Sorts and deduplicates. Throws empty_input (empty list or a zero entry)
/// and non_coprime.
GeneratorSet normalize_generators(std::span<const u64> raw);

/// Apéry array by Dijkstra over ℤ/mℤ: edge r → (r+g) mod m of weight g for
/// every generator g, so the distance to r is the least element of class r.
SemigroupProfile profile_from_generators(const GeneratorSet& gens);

/// Builds a profile from an Apéry array (apery[0] must be 0 and apery[r] ≡ r).
SemigroupProfile profile_from_apery(std::vector<u64> apery);

/// Profile of ℕ∖gaps. Throws not_closed if the complement is not additively
/// closed.
SemigroupProfile profile_from_gaps(const GapSet& gs);

bool contains(const SemigroupProfile& p, u64 n) noexcept;

GapSet gaps_of(const SemigroupProfile& p);

inline bool is_symmetric(const SemigroupProfile& p) noexcept {
    return p.conductor == 2 * p.genus;
}

/// Pairwise closure check of the complement: for all x, y ∉ gaps with
/// x + y < window, x + y ∉ gaps. `window` defaults to gs.bound.
bool verify_cofinite_complement(const GapSet& gs);
bool verify_cofinite_complement(const GapSet& gs, u64 window);

/// Minimal generating set, read off the Apéry array.
std::vector<u64> minimal_generators(const SemigroupProfile& p);

} // namespace skab
