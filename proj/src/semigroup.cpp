#include "skab/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace skab {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::empty_input: return "EmptyInput";
    case Errc::non_coprime: return "NonCoprime";
    case Errc::overflow: return "Overflow";
    case Errc::unsupported_s: return "UnsupportedS";
    case Errc::duplicate_residue: return "DuplicateResidue";
    case Errc::out_of_domain: return "OutOfDomain";
    case Errc::sum_mismatch: return "SumMismatch";
    case Errc::duplicate_gap: return "DuplicateGap";
    case Errc::non_integer_result: return "NonIntegerResult";
    case Errc::not_closed: return "NotClosed";
    case Errc::no_witness: return "NoWitness";
    case Errc::unsupported_combination: return "UnsupportedCombination";
    case Errc::table_mismatch: return "TableMismatch";
    }
    return "Unknown";
}

GeneratorSet normalize_generators(std::span<const u64> raw) {
    if (raw.empty())
        throw Error(Errc::empty_input, "generator list is empty");
    std::vector<u64> gens(raw.begin(), raw.end());
    if (std::find(gens.begin(), gens.end(), u64{0}) != gens.end())
        throw Error(Errc::empty_input, "generators must be positive");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    u64 g = 0;
    for (u64 v : gens) g = std::gcd(g, v);
    if (g != 1)
        throw Error(Errc::non_coprime, "gcd of generators is " + std::to_string(g));
    return GeneratorSet(std::move(gens));
}

SemigroupProfile profile_from_apery(std::vector<u64> apery) {
    SemigroupProfile p;
    p.multiplicity = apery.size();
    const u64 m = p.multiplicity;
    u64 genus = 0;
    u64 top = 0;
    for (u64 a : apery) {
        genus = checked_add(genus, a / m);
        top = std::max(top, a);
    }
    p.apery = std::move(apery);
    p.genus = genus;
    p.conductor = top + 1 - m;
    p.frobenius = static_cast<std::int64_t>(p.conductor) - 1;
    return p;
}

SemigroupProfile profile_from_generators(const GeneratorSet& gens) {
    const u64 m = gens.min();
    constexpr u64 unreached = std::numeric_limits<u64>::max();
    std::vector<u64> dist(m, unreached);
    std::vector<bool> done(m, false);
    dist[0] = 0;

    using Entry = std::pair<u64, u64>;  // (distance, residue)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (done[r]) continue;
        done[r] = true;
        for (u64 g : gens.values()) {
            const u64 step = g % m;
            if (step == 0) continue;
            const u64 next = (r + step) % m;
            const u64 nd = checked_add(d, g);
            if (nd < dist[next]) {
                dist[next] = nd;
                queue.emplace(nd, next);
            }
        }
    }
    return profile_from_apery(std::move(dist));
}

SemigroupProfile profile_from_gaps(const GapSet& gs) {
    if (gs.gaps.empty()) return SemigroupProfile{};
    if (gs.gaps.front() == 0)
        throw Error(Errc::not_closed, "0 is listed as a gap");

    // Smallest positive non-gap.
    u64 m = 1;
    for (u64 gap : gs.gaps) {
        if (gap != m) break;
        ++m;
    }

    constexpr u64 unset = std::numeric_limits<u64>::max();
    std::vector<u64> apery(m, unset);
    u64 assigned = 0;
    auto gap_it = gs.gaps.begin();
    for (u64 n = 0; assigned < m; ++n) {
        while (gap_it != gs.gaps.end() && *gap_it < n) ++gap_it;
        if (gap_it != gs.gaps.end() && *gap_it == n) continue;
        u64& slot = apery[n % m];
        if (slot == unset) {
            slot = n;
            ++assigned;
        }
    }

    // ℕ∖gaps is a semigroup iff no gap sits above its class minimum and the
    // Apéry array is closed: apery[r] + apery[s] ≥ apery[(r+s) mod m].
    for (u64 gap : gs.gaps) {
        if (gap > apery[gap % m])
            throw Error(Errc::not_closed,
                        "gap " + std::to_string(gap) + " lies above its Apéry element");
    }
    for (u64 r = 1; r < m; ++r) {
        for (u64 s = r; s < m; ++s) {
            const u64 t = (r + s) % m;
            if (apery[r] + apery[s] < apery[t])
                throw Error(Errc::not_closed, std::to_string(apery[r]) + " + " +
                                                  std::to_string(apery[s]) + " is a gap");
        }
    }
    return profile_from_apery(std::move(apery));
}

bool contains(const SemigroupProfile& p, u64 n) noexcept {
    return n >= p.apery[n % p.multiplicity];
}

GapSet gaps_of(const SemigroupProfile& p) {
    GapSet gs;
    gs.bound = p.conductor;
    gs.gaps.reserve(p.genus);
    const u64 m = p.multiplicity;
    for (u64 r = 1; r < m; ++r) {
        for (u64 n = r; n < p.apery[r]; n += m) gs.gaps.push_back(n);
    }
    std::sort(gs.gaps.begin(), gs.gaps.end());
    return gs;
}

namespace {

// Membership bitmap over [0, window); bit n set iff n is not a gap.
class Bitmap {
public:
    explicit Bitmap(u64 size) : size_(size), words_(size / 64 + 2, ~u64{0}) {}

    void clear(u64 n) { words_[n / 64] &= ~(u64{1} << (n % 64)); }
    bool test(u64 n) const { return (words_[n / 64] >> (n % 64)) & 1U; }

    // 64 bits starting at an arbitrary position.
    u64 window(u64 pos) const {
        const u64 w = pos / 64;
        const unsigned shift = pos % 64;
        if (shift == 0) return words_[w];
        return (words_[w] >> shift) | (words_[w + 1] << (64 - shift));
    }

private:
    u64 size_;
    std::vector<u64> words_;
};

} // namespace

bool verify_cofinite_complement(const GapSet& gs) {
    return verify_cofinite_complement(gs, gs.bound);
}

bool verify_cofinite_complement(const GapSet& gs, u64 window) {
    if (!gs.gaps.empty() && gs.gaps.front() == 0) return false;
    Bitmap in_h(window);
    for (u64 gap : gs.gaps) {
        if (gap < window) in_h.clear(gap);
    }

    // For each x ∈ H (x ≥ 1) and each y ∈ H with x ≤ y < window − x, require
    // x + y ∈ H. Processed 64 values of y at a time.
    for (u64 x = 1; 2 * x < window; ++x) {
        if (!in_h.test(x)) continue;
        const u64 y_end = window - x;
        for (u64 y = x; y < y_end; y += 64) {
            u64 lhs = in_h.window(y);
            const u64 rhs = in_h.window(y + x);
            const u64 span = y_end - y;
            if (span < 64) lhs &= (u64{1} << span) - 1;
            if (lhs & ~rhs) return false;
        }
    }
    return true;
}

std::vector<u64> minimal_generators(const SemigroupProfile& p) {
    const u64 m = p.multiplicity;
    std::vector<u64> gens{m};
    if (m == 1) return gens;

    std::vector<u64> sorted(p.apery.begin() + 1, p.apery.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const u64 w = sorted[i];
        bool decomposable = false;
        for (std::size_t j = 0; j < i && !decomposable; ++j) {
            const u64 rest = w - sorted[j];
            decomposable = rest != 0 && p.apery[rest % m] == rest;
        }
        if (!decomposable) gens.push_back(w);
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

} // namespace skab
