#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graham/classification.hpp"
#include "graham/core_model.hpp"

namespace graham {

struct ScreenRow {
    std::string ticker;
    Percent ret_5y_annualized;
    std::optional<Percent> ret_1y;
    std::optional<Percent> ret_0y;
    Percent past_growth_5y;
    int analyst_count = 0;
    double current_ratio = 0.0;

    friend bool operator==(const ScreenRow&, const ScreenRow&) = default;
};

/// Why tier members did not reach either list.
struct ScreenDiagnostics {
    int in_tier = 0;
    int below_analyst_gate = 0;
    int valuation_unavailable = 0;  // no 5Y estimate
    int neither_buy_nor_sell = 0;

    friend bool operator==(const ScreenDiagnostics&, const ScreenDiagnostics&) = default;
};

struct ScreenResult {
    MarketCapTier tier = MarketCapTier::Mega;
    std::string week_label;  // "WK 11"
    std::vector<ScreenRow> buys;   // by 5Y% descending, then ticker
    std::vector<ScreenRow> sells;  // by 5Y% ascending, then ticker
    Date as_of;
    ScreenDiagnostics diagnostics;

    friend bool operator==(const ScreenResult&, const ScreenResult&) = default;
};

/// "WK nn" from the ISO week of `as_of`.
std::string week_label_for(Date as_of);

/// Buy/sell screen for one tier. Candidates must fall in `tier`, meet its
/// analyst floor, and have a 5Y return estimate. Buys need
/// 5Y% >= buy_growth_threshold and past growth > 0; sells need 5Y% < 0.
/// Each list is truncated to `top_n`.
ScreenResult screen_tier(const Universe& universe, MarketCapTier tier,
                         const GrahamConstants& constants = {}, int top_n = 10,
                         const TierScheme& scheme = {});

/// One result per tier, Mega through Nano.
std::vector<ScreenResult> screen_all_tiers(const Universe& universe,
                                           const GrahamConstants& constants = {},
                                           int top_n = 10, const TierScheme& scheme = {});

}  // namespace graham
