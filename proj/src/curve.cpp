#include "skab/curve.hpp"

#include <algorithm>
#include <string>

namespace skab {

CurveParams make_params(unsigned s) {
    if (s == 0 || s > kMaxS)
        throw Error(Errc::unsupported_s,
                    "s = " + std::to_string(s) + " (supported: 1.." + std::to_string(kMaxS) + ")");
    CurveParams p;
    p.s = s;
    p.q0 = u64{1} << s;
    p.q = 2 * p.q0 * p.q0;
    const u64 q = p.q;
    p.genus = checked_mul(checked_mul(q, q - 1), q - 1) / 2;
    p.two_g_minus_2 = 2 * p.genus - 2;
    return p;
}

PoleOrderTable pole_order_table(const CurveParams& p) {
    const u64 q0 = p.q0, q = p.q;
    const u64 sq = q * q;
    const u64 unit = sq + 1;  // pole order of π_P and w̃
    PoleOrderTable t;
    t.x = {1, sq - 2 * q0 * q + q};
    t.y = {q0, sq - q0 * q + q0};
    t.z = {2 * q0, sq - q + 2 * q0};
    t.w = {q, unit};
    t.pi = {sq, unit};
    t.f1 = {q0 * q + q0, q0 * unit};
    t.f2 = {2 * q0 * q + 2 * q0 + 1, 2 * q0 * unit};
    for (u64 n = 1; n + 2 <= 2 * q0; ++n)
        t.h.push_back({(n + 1) * q0 * q, ((n + 1) * q0 - n) * unit});
    for (u64 n = 0; n + 2 <= q0; ++n)
        t.g.push_back({(2 * n + 1) * q0 * q + n + 1, ((2 * n + 1) * q0 - n) * unit});
    return t;
}

GeneratorSet rational_generators(const CurveParams& p) {
    const u64 q0 = p.q0, q = p.q;
    const u64 raw[] = {
        q * q - 2 * q0 * q + q,
        q * q - q0 * q + q0,
        q * q - q + 2 * q0,
        q * q,
        q * q + 1,
    };
    return normalize_generators(raw);
}

std::vector<u64> rational_apery(const CurveParams& p) {
    const auto gens = rational_generators(p);
    const u64 g0 = gens[0], g1 = gens[1], g2 = gens[2], g3 = gens[3], g4 = gens[4];
    const u64 q0 = p.q0, q = p.q;

    std::vector<u64> apery;
    apery.reserve(g0);
    std::vector<bool> seen(g0, false);
    for (u64 h = 0; h <= 1; ++h)
        for (u64 i = 0; i < q0; ++i)
            for (u64 j = 0; j <= q - 2 * q0; ++j)
                for (u64 k = 0; k < q0; ++k) {
                    u64 a = checked_mul(h, g1);
                    a = checked_fma(i, g2, a);
                    a = checked_fma(j, g3, a);
                    a = checked_fma(k, g4, a);
                    const u64 r = a % g0;
                    if (seen[r])
                        throw Error(Errc::duplicate_residue,
                                    "residue " + std::to_string(r) + " mod " + std::to_string(g0));
                    seen[r] = true;
                    apery.push_back(a);
                }
    if (apery.size() != g0)
        throw Error(Errc::duplicate_residue, "box does not cover every residue class");
    std::sort(apery.begin(), apery.end());
    return apery;
}

u64 quartic_multiplicity(const CurveParams& p) { return p.q * p.q - p.q + 1; }

GeneratorSet quartic_generators(const CurveParams& p) {
    const u64 q0 = p.q0, q = p.q;
    const u64 g0 = quartic_multiplicity(p);
    const u64 g4 = q * q + 1;
    std::vector<u64> raw{g0, q * q - 2 * q0 + 1, q * q - q0 + 1, q * q, g4};
    for (u64 i = 0; i + 2 <= 2 * q0; ++i)
        raw.push_back(checked_sub(checked_mul(checked_mul(i + 1, q0), g0), i * g4 + 1));
    for (u64 j = 0; j + 2 <= q0; ++j)
        raw.push_back(checked_sub(checked_mul(checked_mul(2 * j + 1, q0), g0), j * g4 + q0));
    return normalize_generators(raw);
}

u64 phi_split_point(const CurveParams& p) { return p.q * (p.q - 2) / 2; }

namespace {

// i = l·q + k·q0 + j with j < q0, k < 2q0.
struct Digits {
    u64 l, k, j;
};

Digits split(const CurveParams& p, u64 i) {
    return {i / p.q, (i / p.q0) % (2 * p.q0), i % p.q0};
}

// max{q - q0·factor, 0}
u64 positive_part(const CurveParams& p, u64 factor) {
    const u64 sub = p.q0 * factor;
    return sub >= p.q ? 0 : p.q - sub;
}

u64 ceil_half(u64 k) { return (k + 1) / 2; }

} // namespace

u64 phi1(const CurveParams& p, u64 i) {
    if (i > phi_split_point(p))
        throw Error(Errc::out_of_domain, "phi1 index " + std::to_string(i));
    const auto [l, k, j] = split(p, i);
    if (j == 0 && k == 0) return l;
    if (j == 0) return l + 1 + positive_part(p, k + 2 * l + 2);
    return l + 1 + positive_part(p, ceil_half(k) + j + l + 1);
}

u64 phi2(const CurveParams& p, u64 i) {
    const u64 g0 = quartic_multiplicity(p);
    if (i <= phi_split_point(p) || i >= g0)
        throw Error(Errc::out_of_domain, "phi2 index " + std::to_string(i));
    const auto [l, k, j] = split(p, g0 - 1 - i);
    const u64 base = checked_sub(p.q, l + 1);
    if (j == p.q0 - 1) return checked_sub(base, positive_part(p, k + 2 * l + 1));
    return checked_sub(base, positive_part(p, ceil_half(k) + j + l + 1));
}

u64 phi(const CurveParams& p, u64 i) {
    return i <= phi_split_point(p) ? phi1(p, i) : phi2(p, i);
}

std::vector<u64> quartic_apery(const CurveParams& p) {
    const u64 g0 = quartic_multiplicity(p);
    std::vector<u64> apery;
    apery.reserve(g0);
    u64 sum = 0;
    for (u64 i = 0; i < g0; ++i) {
        const u64 v = phi(p, i);
        sum = checked_add(sum, v);
        apery.push_back(checked_fma(v, g0, i));
    }
    if (sum != p.genus)
        throw Error(Errc::sum_mismatch,
                    "sum of phi = " + std::to_string(sum) + ", genus = " + std::to_string(p.genus));
    std::sort(apery.begin(), apery.end());
    return apery;
}

} // namespace skab
