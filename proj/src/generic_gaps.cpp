#include "skab/generic_gaps.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <random>
#include <string>
#include <thread>

namespace skab {

std::string_view family_name(FamilyId id) noexcept {
    switch (id) {
    case FamilyId::F1: return "F1";
    case FamilyId::F2: return "F2";
    case FamilyId::F3: return "F3";
    case FamilyId::F4: return "F4";
    case FamilyId::F5: return "F5";
    case FamilyId::F6: return "F6";
    }
    return "F?";
}

u64 nu_of(const CurveParams& p, u64 a1, u64 a2, u64 a3, u64 a4, u64 f) {
    u64 nu = a1;
    nu = checked_fma(a2, p.q0, nu);
    nu = checked_fma(a3, 2 * p.q0, nu);
    nu = checked_fma(a4, p.q, nu);
    nu = checked_fma(f, checked_mul(p.q, p.q), nu);
    return nu;
}

FamilyParams make_family_params(const CurveParams& p, std::uint32_t a1, std::uint32_t a2,
                                std::uint32_t a3, std::uint32_t a4, std::uint32_t f,
                                std::uint32_t n, std::uint32_t c, std::uint32_t d) {
    FamilyParams fp{a1, a2, a3, a4, f, n, c, d, 0, 0};
    fp.sigma = a1 + a2 + a3 + a4 + f;
    fp.nu = nu_of(p, a1, a2, a3, a4, f);
    return fp;
}

u64 family_value(const CurveParams& p, FamilyId id, const FamilyParams& fp) {
    const u64 q0 = p.q0, q = p.q, n = fp.n;
    const u64 q0q = checked_mul(q0, q);
    const u64 nu = nu_of(p, fp.a1, fp.a2, fp.a3, fp.a4, fp.f);
    u64 offset = 0;
    switch (id) {
    case FamilyId::F1: offset = 1; break;
    case FamilyId::F2: offset = checked_fma(n + 1, q0q, 1); break;
    case FamilyId::F3: offset = checked_fma(2 * n + 1, q0q, n + 2); break;
    case FamilyId::F4: offset = checked_fma(2 * n + 2, q0q, n + 3); break;
    case FamilyId::F5:
        offset = checked_fma(fp.c, checked_mul(q0, q + 1),
                             checked_fma(fp.d, 2 * q0q + 2 * q0 + 1, 1));
        break;
    case FamilyId::F6: offset = checked_fma(2 * n + 2, q0q, q0 + n + 2); break;
    }
    return checked_add(nu, offset);
}

bool satisfies_constraints(const CurveParams& p, FamilyId id, const FamilyParams& fp) {
    using i64 = std::int64_t;
    const i64 q0 = static_cast<i64>(p.q0), q = static_cast<i64>(p.q);
    const i64 a1 = fp.a1, a2 = fp.a2, a3 = fp.a3, a4 = fp.a4, n = fp.n, c = fp.c, d = fp.d;
    const i64 sigma = a1 + a2 + a3 + a4 + fp.f;
    if (static_cast<i64>(fp.sigma) != sigma) return false;
    if (fp.nu != nu_of(p, fp.a1, fp.a2, fp.a3, fp.a4, fp.f)) return false;

    const bool unused_zero_n = n == 0;
    const bool unused_zero_cd = c == 0 && d == 0;
    switch (id) {
    case FamilyId::F1:
        return unused_zero_n && unused_zero_cd && a1 < q0 && a2 <= 1 && a3 < q0 && sigma <= q - 2;
    case FamilyId::F2:
        return unused_zero_cd && n >= 1 && n <= 2 * q0 - 2 && a1 < q0 && a2 <= 1 && a3 < q0 &&
               a4 <= q - q0 - 1 - n * q0 && sigma == q - q0 - 2 - n * q0 + n;
    case FamilyId::F3:
        return unused_zero_cd && n <= q0 - 2 && a1 <= q0 - 2 - n && a2 <= 1 && a3 < q0 &&
               a4 < q0 && sigma == q - q0 - 2 - 2 * n * q0 + n;
    case FamilyId::F4:
        return unused_zero_cd && n <= q0 - 3 && a1 <= q0 - 3 - n && a2 <= 1 && a3 < q0 &&
               a4 < q0 && sigma == q - 2 * q0 - 2 - 2 * n * q0 + n;
    case FamilyId::F5:
        return unused_zero_n && a1 == 0 && c <= 1 && a2 <= 1 - c && d >= 1 - c && d <= q0 - 1 &&
               a3 <= q0 - 1 - d && a4 < q0 && sigma == q - 2 - 2 * d * q0 - c * q0;
    case FamilyId::F6:
        return unused_zero_cd && a1 == 0 && a2 == 0 && n <= q0 - 2 && a3 <= n && a4 < q0 &&
               sigma == q - 2 * q0 - 2 - 2 * n * q0 + n;
    }
    return false;
}

namespace {

bool by_value(const GapRecord& a, const GapRecord& b) { return a.value < b.value; }

void check_range(const CurveParams& p, const GapRecord& r) {
    if (r.value == 0 || r.value > 2 * p.genus - 1)
        throw Error(Errc::out_of_domain, std::string(family_name(r.family)) + " value " +
                                             std::to_string(r.value) + " outside [1, 2g-1]");
}

// Runs job(i) for i in [0, count) on at most `threads` threads.
template <class Job>
void run_parallel(std::size_t count, unsigned threads, Job&& job) {
    const unsigned workers = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(count));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        job(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace

std::vector<GapRecord> enumerate_family(const CurveParams& p, FamilyId id) {
    std::vector<GapRecord> out;
    visit_family(p, id, [&](const GapRecord& r) { out.push_back(r); });
    std::sort(out.begin(), out.end(), by_value);
    return out;
}

GapEnumeration enumerate_all(const CurveParams& p, unsigned threads) {
    std::array<std::vector<GapRecord>, 6> parts;
    run_parallel(kFamilies.size(), threads,
                 [&](std::size_t i) { parts[i] = enumerate_family(p, kFamilies[i]); });

    GapEnumeration result;
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    result.records.reserve(total);
    for (auto& part : parts) {
        result.records.insert(result.records.end(), part.begin(), part.end());
        part = {};
    }
    std::sort(result.records.begin(), result.records.end(), by_value);

    result.gaps.gaps.reserve(total);
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        const auto& r = result.records[i];
        check_range(p, r);
        if (i > 0 && result.records[i - 1].value == r.value)
            throw Error(Errc::duplicate_gap,
                        std::to_string(r.value) + " occurs in " +
                            std::string(family_name(result.records[i - 1].family)) + " and " +
                            std::string(family_name(r.family)));
        result.gaps.gaps.push_back(r.value);
    }
    result.gaps.bound = result.gaps.gaps.empty() ? 0 : result.gaps.gaps.back() + 1;
    return result;
}

std::array<u64, 6> family_counts(const CurveParams& p, unsigned threads) {
    std::array<u64, 6> counts{};
    run_parallel(kFamilies.size(), threads, [&](std::size_t i) {
        u64 count = 0;
        visit_family(p, kFamilies[i], [&](const GapRecord&) { ++count; });
        counts[i] = count;
    });
    return counts;
}

u64 family_count_closed_form(const CurveParams& p, FamilyId id) {
    using i128 = __int128;
    const i128 q = p.q, q0 = p.q0;
    i128 scaled = 0;  // 24 × count
    switch (id) {
    case FamilyId::F1: scaled = 12 * q * q * q - 24 * q * q * q0 + 7 * q * q - 2 * q; break;
    case FamilyId::F2: scaled = 24 * q * q * q0 - 43 * q * q + 24 * q * q0 + 2 * q + 24; break;
    case FamilyId::F3: scaled = 6 * q * q - 12 * q * q0; break;
    case FamilyId::F4: scaled = 6 * q * q - 36 * q * q0 + 24 * q; break;
    // c = 0 part (12qq0 - 12q) plus c = 1 part (6qq0 + 6q - 24)
    case FamilyId::F5: scaled = 18 * q * q0 - 6 * q - 24; break;
    case FamilyId::F6: scaled = 6 * q * q0 - 6 * q; break;
    }
    if (scaled < 0 || scaled % 24 != 0)
        throw Error(Errc::non_integer_result,
                    std::string(family_name(id)) + " closed form is not a natural number");
    const i128 count = scaled / 24;
    if (count > static_cast<i128>(std::numeric_limits<u64>::max()))
        throw Error(Errc::overflow, "closed form count");
    return static_cast<u64>(count);
}

u64 binomial(u64 n, u64 k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (u64 i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<u64>::max())
            throw Error(Errc::overflow, "C(" + std::to_string(n) + ", " + std::to_string(k) + ")");
    }
    return static_cast<u64>(r);
}

bool binom_sum_check(u64 n) {
    u64 sum = 0;
    for (u64 sigma = 0; sigma <= n; ++sigma) sum = checked_add(sum, binomial(sigma + 4, 4));
    return sum == binomial(checked_add(n, 5), 5);
}

GapSet generic_gap_set(const CurveParams& p) {
    if (p.s > kMaxGenericS)
        throw Error(Errc::unsupported_s, "generic gap set needs s <= " + std::to_string(kMaxGenericS));
    const u64 limit = 2 * p.genus;
    std::vector<std::uint8_t> owner(limit, 0);  // family number, 0 = not a gap
    for (FamilyId id : kFamilies) {
        visit_family(p, id, [&](const GapRecord& r) {
            check_range(p, r);
            auto& slot = owner[r.value];
            if (slot != 0)
                throw Error(Errc::duplicate_gap,
                            std::to_string(r.value) + " occurs in " +
                                std::string(family_name(static_cast<FamilyId>(slot))) + " and " +
                                std::string(family_name(id)));
            slot = static_cast<std::uint8_t>(id);
        });
    }
    GapSet gs;
    gs.gaps.reserve(p.genus);
    for (u64 v = 1; v < limit; ++v)
        if (owner[v] != 0) gs.gaps.push_back(v);
    gs.bound = gs.gaps.empty() ? 0 : gs.gaps.back() + 1;
    return gs;
}

u64 sampled_closure_violations(const GapSet& gs, u64 window, u64 samples, u64 seed) {
    std::vector<u64> members;
    {
        auto gap = gs.gaps.begin();
        for (u64 n = 0; n < window; ++n) {
            while (gap != gs.gaps.end() && *gap < n) ++gap;
            if (gap == gs.gaps.end() || *gap != n) members.push_back(n);
        }
    }
    if (members.empty()) return 0;

    std::mt19937_64 rng(seed);
    u64 violations = 0;
    for (u64 i = 0; i < samples; ++i) {
        std::uniform_int_distribution<std::size_t> pick_x(0, members.size() - 1);
        const u64 x = members[pick_x(rng)];
        // y ranges over members below window - x (always contains 0).
        const auto end = std::lower_bound(members.begin(), members.end(), window - x);
        std::uniform_int_distribution<std::size_t> pick_y(
            0, static_cast<std::size_t>(end - members.begin()) - 1);
        const u64 y = members[pick_y(rng)];
        if (std::binary_search(gs.gaps.begin(), gs.gaps.end(), x + y)) ++violations;
    }
    return violations;
}

GenericSemigroup generic_semigroup(const CurveParams& p, const ClosureOptions& opts) {
    GenericSemigroup out;
    out.gaps = generic_gap_set(p);
    const bool closed =
        opts.mode == ClosureMode::full
            ? verify_cofinite_complement(out.gaps)
            : sampled_closure_violations(out.gaps, 2 * out.gaps.bound, opts.samples, opts.seed) == 0;
    if (!closed)
        throw Error(Errc::not_closed, "complement of F1..F6 is not additively closed");
    out.profile = profile_from_gaps(out.gaps);
    return out;
}

} // namespace skab
