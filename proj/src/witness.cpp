#include "skab/witness.hpp"

#include <limits>
#include <string>

namespace skab {

WitnessVector zero_witness(const CurveParams& p) {
    WitnessVector w;
    w.b.assign(2 * p.q0 - 2, 0);
    w.e.assign(p.q0 - 1, 0);
    return w;
}

namespace {

template <class Fn>
u64 weighted_sum(const CurveParams& p, const WitnessVector& w, Fn&& pick) {
    const auto t = pole_order_table(p);
    if (w.b.size() != t.h.size() || w.e.size() != t.g.size())
        throw Error(Errc::out_of_domain, "witness vector sized for a different curve");
    u64 sum = 0;
    auto add = [&](u64 exponent, const BlockOrders& o) {
        sum = checked_fma(exponent, pick(o), sum);
    };
    add(w.a1, t.x);
    add(w.a2, t.y);
    add(w.a3, t.z);
    add(w.a4, t.w);
    add(w.f, t.pi);
    for (std::size_t i = 0; i < w.b.size(); ++i) add(w.b[i], t.h[i]);
    add(w.c, t.f1);
    add(w.d, t.f2);
    for (std::size_t i = 0; i < w.e.size(); ++i) add(w.e[i], t.g[i]);
    return sum;
}

} // namespace

u64 witness_valuation(const CurveParams& p, const WitnessVector& w) {
    return weighted_sum(p, w, [](const BlockOrders& o) { return o.valuation; });
}

u64 witness_pole_order(const CurveParams& p, const WitnessVector& w) {
    return weighted_sum(p, w, [](const BlockOrders& o) { return o.pole; });
}

bool witness_certifies(const CurveParams& p, const WitnessVector& w, u64 value) {
    return value >= 1 && witness_valuation(p, w) == value - 1 &&
           witness_pole_order(p, w) <= p.two_g_minus_2;
}

std::optional<WitnessVector> seed_witness(const CurveParams& p, const GapRecord& r) {
    const auto& fp = r.params;
    WitnessVector w = zero_witness(p);
    w.a1 = fp.a1;
    w.a2 = fp.a2;
    w.a3 = fp.a3;
    w.a4 = fp.a4;
    w.f = fp.f;
    switch (r.family) {
    case FamilyId::F1: break;
    case FamilyId::F2:
        if (fp.n < 1 || fp.n > w.b.size()) return std::nullopt;
        w.b[fp.n - 1] = 1;
        break;
    case FamilyId::F3:
        if (fp.n >= w.e.size()) return std::nullopt;
        w.e[fp.n] = 1;
        break;
    case FamilyId::F4: return std::nullopt;
    case FamilyId::F5:
        w.c = fp.c;
        w.d = fp.d;
        break;
    case FamilyId::F6:
        // q0 + (2n+2)q0q + n + 1 = v(g_n) + v(f1)
        if (fp.n >= w.e.size()) return std::nullopt;
        w.e[fp.n] = 1;
        w.c = 1;
        break;
    }
    if (!witness_certifies(p, w, r.value)) return std::nullopt;
    return w;
}

WitnessFinder::WitnessFinder(const CurveParams& p) : params_(p) {
    if (p.s > kMaxGenericS)
        throw Error(Errc::unsupported_s, "witness search needs s <= " + std::to_string(kMaxGenericS));

    const auto t = pole_order_table(p);
    auto scalar = [&](const BlockOrders& o, u64 WitnessVector::*field) {
        blocks_.push_back({o.valuation, o.pole, field, nullptr, 0});
    };
    auto indexed = [&](const BlockOrders& o, std::vector<u64> WitnessVector::*field, std::size_t i) {
        blocks_.push_back({o.valuation, o.pole, nullptr, field, i});
    };
    scalar(t.x, &WitnessVector::a1);
    scalar(t.y, &WitnessVector::a2);
    scalar(t.z, &WitnessVector::a3);
    scalar(t.w, &WitnessVector::a4);
    scalar(t.pi, &WitnessVector::f);
    for (std::size_t i = 0; i < t.h.size(); ++i) indexed(t.h[i], &WitnessVector::b, i);
    scalar(t.f1, &WitnessVector::c);
    scalar(t.f2, &WitnessVector::d);
    for (std::size_t i = 0; i < t.g.size(); ++i) indexed(t.g[i], &WitnessVector::e, i);

    // Unbounded min-cost knapsack: least_pole_[v] is the smallest pole order
    // of any monomial with valuation exactly v.
    constexpr u64 none = std::numeric_limits<u64>::max();
    const u64 size = p.two_g_minus_2 + 1;
    least_pole_.assign(size, none);
    last_block_.assign(size, 0);
    least_pole_[0] = 0;
    for (u64 v = 1; v < size; ++v) {
        u64 best = none;
        std::uint8_t arg = 0;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            const auto& blk = blocks_[b];
            if (blk.valuation > v) continue;
            const u64 prev = least_pole_[v - blk.valuation];
            if (prev == none) continue;
            const u64 cand = prev + blk.pole;
            if (cand < best) {
                best = cand;
                arg = static_cast<std::uint8_t>(b);
            }
        }
        least_pole_[v] = best;
        last_block_[v] = arg;
    }
}

std::optional<WitnessVector> WitnessFinder::search(u64 value) const {
    if (value == 0 || value - 1 >= least_pole_.size()) return std::nullopt;
    u64 v = value - 1;
    if (least_pole_[v] > params_.two_g_minus_2) return std::nullopt;

    WitnessVector w = zero_witness(params_);
    while (v > 0) {
        const auto& blk = blocks_[last_block_[v]];
        if (blk.scalar != nullptr)
            ++(w.*blk.scalar);
        else
            ++(w.*blk.indexed)[blk.index];
        v -= blk.valuation;
    }
    return w;
}

WitnessVector WitnessFinder::find(const GapRecord& r) const {
    if (auto w = seed_witness(params_, r)) return *w;
    if (auto w = search(r.value)) return *w;
    throw Error(Errc::no_witness, std::string(family_name(r.family)) + " gap " +
                                      std::to_string(r.value));
}

WitnessVector gap_witness(const CurveParams& p, const GapRecord& r) {
    if (auto w = seed_witness(p, r)) return *w;
    return WitnessFinder(p).find(r);
}

} // namespace skab
