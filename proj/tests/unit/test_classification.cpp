#include <doctest.h>

#include <cmath>
#include <random>

#include "graham/classification.hpp"
#include "graham/error.hpp"

using namespace graham;
using T = MarketCapTier;

TEST_CASE("tier boundaries are lower-inclusive") {
    CHECK(classify_market_cap(300e9) == T::Mega);
    CHECK(classify_market_cap(std::nextafter(300e9, 0.0)) == T::Big);
    CHECK(classify_market_cap(10e9) == T::Big);
    CHECK(classify_market_cap(2e9) == T::Mid);
    CHECK(classify_market_cap(300e6) == T::Small);
    CHECK(classify_market_cap(50e6) == T::Micro);
    CHECK(classify_market_cap(49'999'999) == T::Nano);
    CHECK(classify_market_cap(0) == T::Nano);
    CHECK(classify_market_cap(2e12) == T::Mega);
}

TEST_CASE("invalid caps") {
    CHECK_THROWS_AS(classify_market_cap(-1), Error);
    CHECK_THROWS_AS(classify_market_cap(NAN), Error);
    CHECK_THROWS_AS(classify_market_cap(INFINITY), Error);
}

TEST_CASE("analyst floors") {
    CHECK(min_analysts_for_tier(T::Mega) == 25);
    CHECK(min_analysts_for_tier(T::Big) == 20);
    CHECK(min_analysts_for_tier(T::Mid) == 15);
    CHECK(min_analysts_for_tier(T::Small) == 10);
    CHECK(min_analysts_for_tier(T::Micro) == 5);
    CHECK(min_analysts_for_tier(T::Nano) == 3);
    CHECK_THROWS_AS(min_analysts_for_tier(static_cast<T>(42)), Error);
}

TEST_CASE("tier names round trip") {
    for (auto t : kTiersDescending) CHECK(parse_tier(tier_name(t)) == t);
    CHECK_FALSE(parse_tier("giga"));
    CHECK(tier_title(T::Mega) == "MegaCap");
}

TEST_CASE("configured scheme") {
    TierScheme s;
    s.mega_floor = 500e9;
    s.mega_analysts = 30;
    CHECK(classify_market_cap(400e9, s) == T::Big);
    CHECK(min_analysts_for_tier(T::Mega, s) == 30);
}

TEST_CASE("property: partition and monotonicity near every floor") {
    const double floors[] = {50e6, 300e6, 2e9, 10e9, 300e9};
    std::vector<double> caps{0.0};
    for (double f : floors) {
        for (double d : {-1.0, 0.0, 1.0}) caps.push_back(f + d);
        caps.push_back(std::nextafter(f, 0.0));
        caps.push_back(std::nextafter(f, 1e300));
    }
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> expo(0.0, 13.0);
    while (caps.size() < 1200) caps.push_back(std::pow(10.0, expo(rng)));

    int failures = 0;
    for (double cap : caps) {
        // Exactly one tier predicate holds.
        const bool preds[] = {cap < 50e6,
                              cap >= 50e6 && cap < 300e6,
                              cap >= 300e6 && cap < 2e9,
                              cap >= 2e9 && cap < 10e9,
                              cap >= 10e9 && cap < 300e9,
                              cap >= 300e9};
        int holding = 0, which = -1;
        for (int i = 0; i < 6; ++i)
            if (preds[i]) ++holding, which = i;
        if (holding != 1 || static_cast<int>(classify_market_cap(cap)) != which) ++failures;
    }
    for (double a : caps)
        for (std::size_t j = 0; j < caps.size(); j += 7)
            if (a >= caps[j] && classify_market_cap(a) < classify_market_cap(caps[j])) ++failures;

    for (std::size_t i = 1; i < kTiersDescending.size(); ++i)
        if (min_analysts_for_tier(kTiersDescending[i]) > min_analysts_for_tier(kTiersDescending[i - 1]))
            ++failures;
    CHECK(failures == 0);
}
