#include "graham/screener.hpp"

#include <algorithm>
#include <cstdio>

#include "graham/pipeline.hpp"

namespace graham {

std::string week_label_for(Date as_of) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "WK %02d", iso_week(as_of));
    return buf;
}

namespace {

bool is_known_tier(MarketCapTier tier) {
    return std::find(kTiersDescending.begin(), kTiersDescending.end(), tier) !=
           kTiersDescending.end();
}

ScreenRow make_row(const StockSnapshot& s, const ValuationReport& r) {
    return {s.ticker,
            *r.implied_return_5y_annualized,
            r.implied_return_1y,
            r.implied_return_0y,
            s.past_growth_5y,
            s.analyst_count,
            s.current_ratio};
}

}  // namespace

ScreenResult screen_tier(const Universe& universe, MarketCapTier tier,
                         const GrahamConstants& constants, int top_n, const TierScheme& scheme) {
    if (!is_known_tier(tier)) throw Error(ErrorKind::InvalidInput, "unknown market-cap tier");
    if (top_n < 1) throw Error(ErrorKind::InvalidInput, "top_n must be >= 1");
    constants.validate();

    ScreenResult result;
    result.tier = tier;
    result.as_of = universe.as_of();
    result.week_label = week_label_for(universe.as_of());

    const int gate = min_analysts_for_tier(tier, scheme);
    for (const auto& s : universe.snapshots()) {
        if (classify_market_cap(s.market_cap_usd, scheme) != tier) continue;
        ++result.diagnostics.in_tier;
        if (s.analyst_count < gate) {
            ++result.diagnostics.below_analyst_gate;
            continue;
        }
        const auto outcome = value_snapshot(s, universe.as_of(), constants);
        if (!outcome.has_5y()) {
            ++result.diagnostics.valuation_unavailable;
            continue;
        }
        const ScreenRow row = make_row(s, *outcome.report);
        if (row.ret_5y_annualized >= constants.buy_growth_threshold &&
            row.past_growth_5y.value > 0.0) {
            result.buys.push_back(row);
        } else if (row.ret_5y_annualized.value < 0.0) {
            result.sells.push_back(row);
        } else {
            ++result.diagnostics.neither_buy_nor_sell;
        }
    }

    std::sort(result.buys.begin(), result.buys.end(), [](const ScreenRow& a, const ScreenRow& b) {
        if (a.ret_5y_annualized != b.ret_5y_annualized)
            return a.ret_5y_annualized > b.ret_5y_annualized;
        return a.ticker < b.ticker;
    });
    std::sort(result.sells.begin(), result.sells.end(), [](const ScreenRow& a, const ScreenRow& b) {
        if (a.ret_5y_annualized != b.ret_5y_annualized)
            return a.ret_5y_annualized < b.ret_5y_annualized;
        return a.ticker < b.ticker;
    });
    const auto limit = static_cast<std::size_t>(top_n);
    if (result.buys.size() > limit) result.buys.resize(limit);
    if (result.sells.size() > limit) result.sells.resize(limit);
    return result;
}

std::vector<ScreenResult> screen_all_tiers(const Universe& universe,
                                           const GrahamConstants& constants, int top_n,
                                           const TierScheme& scheme) {
    std::vector<ScreenResult> out;
    out.reserve(kTiersDescending.size());
    for (auto tier : kTiersDescending)
        out.push_back(screen_tier(universe, tier, constants, top_n, scheme));
    return out;
}

}  // namespace graham
