#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skab/error.hpp"
#include "skab/semigroup.hpp"

using namespace skab;

namespace {

GeneratorSet gens(std::vector<u64> v) { return normalize_generators(v); }

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::overflow;
}

} // namespace

TEST_CASE("normalize sorts and dedupes") {
    const auto g = gens({65, 40, 50, 60, 64, 40});
    CHECK(std::vector<u64>(g.values().begin(), g.values().end()) == std::vector<u64>{40, 50, 60, 64, 65});
    CHECK(gens({1}).size() == 1);
}

TEST_CASE("normalize rejects bad input") {
    CHECK(code_of([] { gens({4, 6}); }) == Errc::non_coprime);
    CHECK(code_of([] { gens({}); }) == Errc::empty_input);
    CHECK(code_of([] { gens({0, 3}); }) == Errc::empty_input);
}

TEST_CASE("profile of small semigroups") {
    const auto one = profile_from_generators(gens({1}));
    CHECK(one.multiplicity == 1);
    CHECK(one.apery == std::vector<u64>{0});
    CHECK(one.genus == 0);
    CHECK(one.conductor == 0);
    CHECK(one.frobenius == -1);

    const auto p = profile_from_generators(gens({3, 5}));
    CHECK(p.apery == std::vector<u64>{0, 10, 5});
    CHECK(p.genus == 4);
    CHECK(p.conductor == 8);
    CHECK(p.frobenius == 7);
    CHECK_FALSE(contains(p, 7));
    CHECK(contains(p, 8));
    CHECK(contains(p, 0));
    CHECK(gaps_of(p).gaps == std::vector<u64>{1, 2, 4, 7});
    CHECK(gaps_of(one).gaps.empty());
}

TEST_CASE("symmetry") {
    CHECK(is_symmetric(profile_from_generators(gens({3, 5}))));
    const auto p = profile_from_generators(gens({3, 5, 7}));
    CHECK(gaps_of(p).gaps == oracle::gaps({3, 5, 7}));
    CHECK(p.genus == 3);
    CHECK(p.conductor == 5);
    CHECK_FALSE(is_symmetric(p));
    CHECK(is_symmetric(profile_from_generators(gens({1}))));
}

TEST_CASE("rational generators at s = 1 against the sieve") {
    const std::vector<u64> raw{40, 50, 60, 64, 65};
    const auto p = profile_from_generators(gens(raw));
    const auto expected = oracle::gaps(raw);
    CHECK(p.genus == 196);
    CHECK(p.conductor == 392);
    CHECK(gaps_of(p).gaps == expected);
    CHECK(expected.size() == 196);
    CHECK(expected.back() == 391);
}

TEST_CASE("cofinite complement checks") {
    CHECK(verify_cofinite_complement(GapSet{{1, 2, 4, 7}, 8}));
    CHECK_FALSE(verify_cofinite_complement(GapSet{{2}, 3}));
    CHECK(verify_cofinite_complement(GapSet{{}, 1}));
    CHECK(verify_cofinite_complement(GapSet{{1, 2, 4, 7}, 8}, 100));
    // 3 + 3 = 6 is listed as a gap
    CHECK_FALSE(verify_cofinite_complement(GapSet{{1, 2, 4, 5, 6}, 7}));
}

TEST_CASE("profile from gaps") {
    const auto p = profile_from_gaps(GapSet{{1, 2, 4, 7}, 8});
    CHECK(p == profile_from_generators(gens({3, 5})));
    CHECK(code_of([] { profile_from_gaps(GapSet{{2}, 3}); }) == Errc::not_closed);
    CHECK(code_of([] { profile_from_gaps(GapSet{{1, 2, 4, 5, 6}, 7}); }) == Errc::not_closed);
}

TEST_CASE("minimal generators") {
    CHECK(minimal_generators(profile_from_generators(gens({3, 5, 6, 8, 10}))) == std::vector<u64>{3, 5});
    CHECK(minimal_generators(profile_from_generators(gens({1, 4}))) == std::vector<u64>{1});
}

TEST_CASE("property: Apéry engine agrees with the sieve on random generator sets") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const auto raw = oracle::random_generators(rng, 50);
        CAPTURE(trial);
        const auto p = profile_from_generators(gens(raw));
        const auto expected_gaps = oracle::gaps(raw);
        const auto gs = gaps_of(p);
        REQUIRE(gs.gaps == expected_gaps);
        CHECK(p.apery == oracle::apery(raw));
        CHECK(p.genus == expected_gaps.size());
        CHECK(p.conductor == (expected_gaps.empty() ? 0 : expected_gaps.back() + 1));
        CHECK(p.conductor <= 2 * p.genus);

        for (u64 r = 0; r < p.multiplicity; ++r) {
            CHECK(p.apery[r] % p.multiplicity == r);
            if (r != 0) CHECK_FALSE(contains(p, p.apery[r] - p.multiplicity));
        }
        CHECK(profile_from_gaps(gs) == p);
        CHECK(profile_from_apery(p.apery) == p);
        CHECK(verify_cofinite_complement(gs, 2 * gs.bound + 1));

        // The minimal generators regenerate the same semigroup.
        const auto mins = minimal_generators(p);
        CHECK(profile_from_generators(gens(mins)) == p);
    }
}

TEST_CASE("property: removing a minimal generator keeps closure, declaring 2m a gap breaks it") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto raw = oracle::random_generators(rng, 20);
        const auto p = profile_from_generators(gens(raw));
        auto gs = gaps_of(p);
        if (p.multiplicity < 2) continue;
        std::vector<u64> bigger = gs.gaps;
        bigger.push_back(p.multiplicity);
        std::sort(bigger.begin(), bigger.end());
        const GapSet g2{bigger, std::max(gs.bound, p.multiplicity + 1)};
        CHECK(verify_cofinite_complement(g2));
        std::vector<u64> broken = gs.gaps;
        const u64 sum = 2 * p.multiplicity;
        if (!std::binary_search(broken.begin(), broken.end(), sum)) {
            broken.push_back(sum);
            std::sort(broken.begin(), broken.end());
            CHECK_FALSE(verify_cofinite_complement(GapSet{broken, std::max(gs.bound, sum + 1)}));
        }
    }
}
