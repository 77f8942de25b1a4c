#pragma once

// Slow, obviously-correct reference computations used only by the tests.
// None of these call into the library.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

// Membership table of <gens> on [0, limit).
inline std::vector<bool> sieve(const std::vector<u64>& gens, u64 limit) {
    std::vector<bool> in(limit, false);
    if (limit > 0) in[0] = true;
    for (u64 n = 1; n < limit; ++n)
        for (u64 g : gens)
            if (g <= n && in[n - g]) {
                in[n] = true;
                break;
            }
    return in;
}

// Gaps of <gens>; gcd must be 1. Every gap lies below min * max.
inline std::vector<u64> gaps(const std::vector<u64>& gens) {
    const u64 lo = *std::min_element(gens.begin(), gens.end());
    const u64 hi = *std::max_element(gens.begin(), gens.end());
    const u64 limit = lo * hi + 1;
    const auto in = sieve(gens, limit);
    std::vector<u64> out;
    for (u64 n = 0; n < limit; ++n)
        if (!in[n]) out.push_back(n);
    return out;
}

// Smallest element of <gens> in each residue class modulo the smallest generator.
inline std::vector<u64> apery(const std::vector<u64>& gens) {
    const u64 m = *std::min_element(gens.begin(), gens.end());
    const u64 hi = *std::max_element(gens.begin(), gens.end());
    const auto in = sieve(gens, m * hi + m + 1);
    std::vector<u64> out(m, 0);
    std::vector<bool> seen(m, false);
    for (u64 n = 0; n < in.size(); ++n)
        if (in[n] && !seen[n % m]) {
            seen[n % m] = true;
            out[n % m] = n;
        }
    return out;
}

struct Curve {
    u64 q0, q, genus;
};

inline Curve curve(unsigned s) {
    const u64 q0 = u64{1} << s;
    const u64 q = 2 * q0 * q0;
    return {q0, q, q * (q - 1) * (q - 1) / 2};
}

// Valuation and pole order of every building-block function, written out
// straight from their definitions.
inline std::vector<std::pair<u64, u64>> blocks(unsigned s) {
    const auto [q0, q, g] = curve(s);
    (void)g;
    const u64 Q = q * q + 1;
    std::vector<std::pair<u64, u64>> b{
        {1, q * q - 2 * q0 * q + q}, {q0, q * q - q0 * q + q0}, {2 * q0, q * q - q + 2 * q0},
        {q, Q},                      {q * q, Q},
    };
    for (u64 n = 1; n <= 2 * q0 - 2; ++n) b.push_back({(n + 1) * q0 * q, ((n + 1) * q0 - n) * Q});
    b.push_back({q0 * q + q0, q0 * Q});
    b.push_back({2 * q0 * q + 2 * q0 + 1, 2 * q0 * Q});
    for (u64 n = 0; n + 2 <= q0; ++n) b.push_back({(2 * n + 1) * q0 * q + n + 1, ((2 * n + 1) * q0 - n) * Q});
    return b;
}

// Every v + 1 where v is the valuation of some product of building blocks
// with total pole order at most 2g - 2. Each such number is a gap at a
// generic point, so when there are exactly g of them they are all the gaps.
inline std::vector<u64> generic_gaps_from_monomials(unsigned s) {
    const auto [q0, q, g] = curve(s);
    (void)q0;
    (void)q;
    const auto b = blocks(s);
    constexpr u64 none = std::numeric_limits<u64>::max();
    std::vector<u64> cheapest(2 * g, none);
    cheapest[0] = 0;
    for (u64 v = 1; v < cheapest.size(); ++v)
        for (const auto& [val, pole] : b)
            if (val <= v && cheapest[v - val] != none)
                cheapest[v] = std::min(cheapest[v], cheapest[v - val] + pole);
    std::vector<u64> out;
    for (u64 v = 0; v < cheapest.size(); ++v)
        if (cheapest[v] <= 2 * g - 2) out.push_back(v + 1);
    return out;
}

inline u64 choose(u64 n, u64 k) {
    if (k > n) return 0;
    u64 r = 1;
    for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Random generator list with gcd 1 and smallest element at most max_m.
inline std::vector<u64> random_generators(std::mt19937_64& rng, u64 max_m) {
    std::uniform_int_distribution<u64> m_dist(2, max_m);
    std::uniform_int_distribution<int> k_dist(1, 5);
    for (;;) {
        const u64 m = m_dist(rng);
        std::uniform_int_distribution<u64> g_dist(m + 1, 3 * m + 7);
        std::vector<u64> gens{m};
        const int extra = k_dist(rng);
        for (int i = 0; i < extra; ++i) gens.push_back(g_dist(rng));
        u64 d = 0;
        for (u64 x : gens) d = std::gcd(d, x);
        if (d == 1) {
            std::shuffle(gens.begin(), gens.end(), rng);
            return gens;
        }
    }
}

} // namespace oracle
