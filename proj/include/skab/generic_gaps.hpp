#pragma once

// Gap sequence at a point of the Skabelund curve that is not F_{q^4}-rational.
//
// The gaps are the union of six parameterised families F1..F6. Each member is
// determined by exponents (a1, a2, a3, a4, f) with σ = a1+a2+a3+a4+f and
// ν = a1 + a2·q0 + a3·2q0 + a4·q + f·q², plus a family index n or the pair
// (c, d) for F5. Wherever a family fixes σ, f is the dependent exponent and
// tuples that would need f < 0 are skipped.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "skab/curve.hpp"

namespace skab {

enum class FamilyId : std::uint8_t { F1 = 1, F2, F3, F4, F5, F6 };

inline constexpr std::array<FamilyId, 6> kFamilies{FamilyId::F1, FamilyId::F2, FamilyId::F3,
                                                   FamilyId::F4, FamilyId::F5, FamilyId::F6};

std::string_view family_name(FamilyId id) noexcept;

inline std::size_t family_index(FamilyId id) noexcept {
    return static_cast<std::size_t>(id) - 1;
}

struct FamilyParams {
    std::uint32_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, f = 0;
    std::uint32_t n = 0;         // F2, F3, F4, F6
    std::uint32_t c = 0, d = 0;  // F5
    std::uint32_t sigma = 0;
    u64 nu = 0;

    bool operator==(const FamilyParams&) const = default;
};

struct GapRecord {
    u64 value = 0;
    FamilyId family = FamilyId::F1;
    FamilyParams params;

    bool operator==(const GapRecord&) const = default;
};

/// a1 + a2·q0 + a3·2q0 + a4·q + f·q²
u64 nu_of(const CurveParams& p, u64 a1, u64 a2, u64 a3, u64 a4, u64 f);

/// Fills sigma and nu from the exponents.
FamilyParams make_family_params(const CurveParams& p, std::uint32_t a1, std::uint32_t a2,
                                std::uint32_t a3, std::uint32_t a4, std::uint32_t f,
                                std::uint32_t n = 0, std::uint32_t c = 0, std::uint32_t d = 0);

/// The family's displayed expression evaluated at `fp`.
u64 family_value(const CurveParams& p, FamilyId id, const FamilyParams& fp);

/// True iff `fp` satisfies every range and σ constraint of family `id` and
/// its stored sigma/nu match the exponents.
bool satisfies_constraints(const CurveParams& p, FamilyId id, const FamilyParams& fp);

/// Calls visit(const GapRecord&) once per parameter tuple of family `id`, in
/// generation order (unsorted).
template <class Visit>
void visit_family(const CurveParams& p, FamilyId id, Visit&& visit);

/// All records of one family, sorted by value.
std::vector<GapRecord> enumerate_family(const CurveParams& p, FamilyId id);

struct GapEnumeration {
    GapSet gaps;                     // sorted values, bound = largest gap + 1
    std::vector<GapRecord> records;  // sorted by value
};

/// Union of F1..F6. Throws duplicate_gap if two tuples share a value.
/// Families are enumerated on up to `threads` threads; the result does not
/// depend on the thread count.
GapEnumeration enumerate_all(const CurveParams& p, unsigned threads = 1);

/// Family sizes by enumeration without retaining records (usable at s = 4).
std::array<u64, 6> family_counts(const CurveParams& p, unsigned threads = 1);

/// Closed-form family size, evaluated exactly as (24·count)/24. Throws
/// non_integer_result if the numerator is not divisible by 24 or is negative.
u64 family_count_closed_form(const CurveParams& p, FamilyId id);

/// Σ_{σ=0..n} C(σ+4, 4) == C(n+5, 5) in exact arithmetic. n ≤ 10⁴.
bool binom_sum_check(u64 n);

/// Exact binomial coefficient; throws overflow if it does not fit in 64 bits.
u64 binomial(u64 n, u64 k);

inline constexpr unsigned kMaxGenericS = 3;

/// Gap set of the generic semigroup streamed through a bitmap over [0, 2g),
/// without keeping records. Throws duplicate_gap, unsupported_s for s > 3.
GapSet generic_gap_set(const CurveParams& p);

enum class ClosureMode { full, sampled };

struct ClosureOptions {
    ClosureMode mode = ClosureMode::full;
    u64 samples = 100000;
    u64 seed = 0x5ca1ab1e;
};

struct GenericSemigroup {
    GapSet gaps;
    SemigroupProfile profile;
};

/// ℕ∖(F1 ∪ … ∪ F6) for s ≤ 3. The complement's closure is checked on
/// [0, conductor) (pairwise, or on random pairs in sampled mode) and again
/// through the Apéry criterion while building the profile. Throws not_closed.
GenericSemigroup generic_semigroup(const CurveParams& p, const ClosureOptions& opts = {});

/// Number of random pairs x, y ∉ gaps with x + y < window whose sum is a gap.
u64 sampled_closure_violations(const GapSet& gs, u64 window, u64 samples, u64 seed);

// ---------------------------------------------------------------------------

template <class Visit>
void visit_family(const CurveParams& p, FamilyId id, Visit&& visit) {
    using i64 = std::int64_t;
    const i64 q0 = static_cast<i64>(p.q0);
    const i64 q = static_cast<i64>(p.q);
    const u64 uq0 = p.q0, uq = p.q;

    GapRecord rec;
    rec.family = id;
    auto emit = [&](i64 a1, i64 a2, i64 a3, i64 a4, i64 f, i64 n, i64 c, i64 d, u64 offset) {
        rec.params = make_family_params(p, static_cast<std::uint32_t>(a1), static_cast<std::uint32_t>(a2),
                                        static_cast<std::uint32_t>(a3), static_cast<std::uint32_t>(a4),
                                        static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(n),
                                        static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(d));
        rec.value = checked_add(rec.params.nu, offset);
        visit(static_cast<const GapRecord&>(rec));
    };

    switch (id) {
    case FamilyId::F1:
        for (i64 a1 = 0; a1 < q0; ++a1)
            for (i64 a2 = 0; a2 <= 1; ++a2)
                for (i64 a3 = 0; a3 < q0; ++a3)
                    for (i64 a4 = 0; a1 + a2 + a3 + a4 <= q - 2; ++a4)
                        for (i64 f = 0; a1 + a2 + a3 + a4 + f <= q - 2; ++f)
                            emit(a1, a2, a3, a4, f, 0, 0, 0, 1);
        break;
    case FamilyId::F2:
        for (i64 n = 1; n <= 2 * q0 - 2; ++n) {
            const i64 sigma = q - q0 - 2 - n * q0 + n;
            const u64 offset = checked_add(checked_mul(static_cast<u64>(n + 1) * uq0, uq), 1);
            for (i64 a1 = 0; a1 < q0; ++a1)
                for (i64 a2 = 0; a2 <= 1; ++a2)
                    for (i64 a3 = 0; a3 < q0; ++a3)
                        for (i64 a4 = 0; a4 <= q - q0 - 1 - n * q0; ++a4) {
                            const i64 f = sigma - a1 - a2 - a3 - a4;
                            if (f >= 0) emit(a1, a2, a3, a4, f, n, 0, 0, offset);
                        }
        }
        break;
    case FamilyId::F3:
        for (i64 n = 0; n <= q0 - 2; ++n) {
            const i64 sigma = q - q0 - 2 - 2 * n * q0 + n;
            const u64 offset = static_cast<u64>(2 * n + 1) * uq0 * uq + static_cast<u64>(n) + 2;
            for (i64 a1 = 0; a1 <= q0 - 2 - n; ++a1)
                for (i64 a2 = 0; a2 <= 1; ++a2)
                    for (i64 a3 = 0; a3 < q0; ++a3)
                        for (i64 a4 = 0; a4 < q0; ++a4) {
                            const i64 f = sigma - a1 - a2 - a3 - a4;
                            if (f >= 0) emit(a1, a2, a3, a4, f, n, 0, 0, offset);
                        }
        }
        break;
    case FamilyId::F4:
        for (i64 n = 0; n <= q0 - 3; ++n) {
            const i64 sigma = q - 2 * q0 - 2 - 2 * n * q0 + n;
            const u64 offset = static_cast<u64>(2 * n + 2) * uq0 * uq + static_cast<u64>(n) + 3;
            for (i64 a1 = 0; a1 <= q0 - 3 - n; ++a1)
                for (i64 a2 = 0; a2 <= 1; ++a2)
                    for (i64 a3 = 0; a3 < q0; ++a3)
                        for (i64 a4 = 0; a4 < q0; ++a4) {
                            const i64 f = sigma - a1 - a2 - a3 - a4;
                            if (f >= 0) emit(a1, a2, a3, a4, f, n, 0, 0, offset);
                        }
        }
        break;
    case FamilyId::F5:
        for (i64 c = 0; c <= 1; ++c)
            for (i64 d = 1 - c; d <= q0 - 1; ++d) {
                const i64 sigma = q - 2 - 2 * d * q0 - c * q0;
                const u64 offset = static_cast<u64>(c) * uq0 * (uq + 1) +
                                   static_cast<u64>(d) * (2 * uq * uq0 + 2 * uq0 + 1) + 1;
                for (i64 a2 = 0; a2 <= 1 - c; ++a2)
                    for (i64 a3 = 0; a3 <= q0 - 1 - d; ++a3)
                        for (i64 a4 = 0; a4 < q0; ++a4) {
                            const i64 f = sigma - a2 - a3 - a4;
                            if (f >= 0) emit(0, a2, a3, a4, f, 0, c, d, offset);
                        }
            }
        break;
    case FamilyId::F6:
        for (i64 n = 0; n <= q0 - 2; ++n) {
            const i64 sigma = q - 2 * q0 - 2 - 2 * n * q0 + n;
            const u64 offset = uq0 + static_cast<u64>(2 * n + 2) * uq0 * uq + static_cast<u64>(n) + 2;
            for (i64 a3 = 0; a3 <= n; ++a3)
                for (i64 a4 = 0; a4 < q0; ++a4) {
                    const i64 f = sigma - a3 - a4;
                    if (f >= 0) emit(0, 0, a3, a4, f, n, 0, 0, offset);
                }
        }
        break;
    }
}

} // namespace skab
