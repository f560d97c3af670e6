#include <doctest.h>

#include <set>

#include "graham/ingest.hpp"
#include "graham/screener.hpp"
#include "support/oracles.hpp"

using namespace graham;
using graham::testing::make_date;

namespace {

const Date kAsOf = make_date(2020, 3, 15);

// Flat EPS e with growth g: 5Y% is 100*((8.5+2g)*e/price)^(1/5) - 100.
StockSnapshot stock(const std::string& ticker, double cap, int analysts, double price, double growth,
                    double eps, double past = 10.0) {
    StockSnapshot s;
    s.ticker = ticker;
    s.price = {price, Currency{}};
    s.market_cap_usd = cap;
    s.analyst_count = analysts;
    s.growth_5y_est = Percent{growth};
    s.past_growth_5y = Percent{past};
    s.eps_history = {{2018, {eps, Currency{}}}, {2019, {eps, Currency{}}}};
    s.eps_fy0_est = MoneyPerShare{eps, Currency{}};
    s.eps_fy1_est = MoneyPerShare{eps, Currency{}};
    return s;
}

std::vector<std::string> tickers(const std::vector<ScreenRow>& rows) {
    std::vector<std::string> out;
    for (const auto& r : rows) out.push_back(r.ticker);
    return out;
}

}  // namespace

TEST_CASE("mega fixture ranks the buys") {
    const auto loaded = load_universe(GRAHAM_FIXTURES "/mega_screen.json");
    REQUIRE(loaded.report.rejected.empty());
    const auto r = screen_tier(loaded.universe, MarketCapTier::Mega);
    CHECK(tickers(r.buys) == std::vector<std::string>{"BABA", "FB", "JPM", "AMZN", "AAPL", "MSFT", "V"});
    CHECK(r.sells.empty());
    CHECK(r.week_label == "WK 11");
    CHECK(r.diagnostics.in_tier == 9);
    CHECK(r.diagnostics.neither_buy_nor_sell == 2);
    CHECK(r.buys[5].ret_5y_annualized == r.buys[6].ret_5y_annualized);
    CHECK(r.buys[0].ret_5y_annualized.value == doctest::Approx(121.0).epsilon(1e-5));
}

TEST_CASE("analyst gate") {
    Universe u(kAsOf);
    u.insert(stock("LOW", 400e9, 24, 10, 20, 1));
    auto r = screen_tier(u, MarketCapTier::Mega);
    CHECK(r.buys.empty());
    CHECK(r.sells.empty());
    CHECK(r.diagnostics.below_analyst_gate == 1);

    Universe v(kAsOf);
    v.insert(stock("OK", 400e9, 25, 10, 20, 1));
    CHECK(screen_tier(v, MarketCapTier::Mega).buys.size() == 1);
}

TEST_CASE("negative five-year return goes to sells") {
    Universe u(kAsOf);
    // 8.5 * 1 / 10 < 1 so the 5Y% is negative.
    u.insert(stock("DOWN", 5e9, 15, 10, 0, 1));
    const auto r = screen_tier(u, MarketCapTier::Mid);
    CHECK(r.buys.empty());
    REQUIRE(r.sells.size() == 1);
    CHECK(r.sells[0].ticker == "DOWN");
    CHECK(r.sells[0].ret_5y_annualized.value < 0);
}

TEST_CASE("buy rules: threshold is inclusive, past growth must be positive") {
    Universe u(kAsOf);
    // price = 8.5 * 1.15^-5 * eps makes 5Y% = 15 up to rounding; nudge price down.
    u.insert(stock("EDGE", 5e9, 20, 8.5 / std::pow(1.15, 5) * 0.999999, 0, 1));
    u.insert(stock("NOPAST", 5e9, 20, 1, 10, 1, 0.0));
    const auto r = screen_tier(u, MarketCapTier::Mid);
    CHECK(tickers(r.buys) == std::vector<std::string>{"EDGE"});
    CHECK(r.diagnostics.neither_buy_nor_sell == 1);
}

TEST_CASE("unavailable valuations are tallied, not listed") {
    Universe u(kAsOf);
    u.insert(stock("NEG", 5e9, 20, 10, 10, -1));
    const auto r = screen_tier(u, MarketCapTier::Mid);
    CHECK(r.buys.empty());
    CHECK(r.sells.empty());
    CHECK(r.diagnostics.valuation_unavailable == 1);
}

TEST_CASE("top_n truncation and tie ordering") {
    Universe u(kAsOf);
    for (const char* t : {"D", "B", "C", "A"}) u.insert(stock(t, 5e9, 20, 1, 10, 1));
    u.insert(stock("Z", 5e9, 20, 1, 20, 1));
    const auto r = screen_tier(u, MarketCapTier::Mid, {}, 3);
    CHECK(tickers(r.buys) == std::vector<std::string>{"Z", "A", "B"});
}

TEST_CASE("argument errors") {
    Universe u(kAsOf);
    CHECK_THROWS_AS(screen_tier(u, MarketCapTier::Mega, {}, 0), Error);
    CHECK_THROWS_AS(screen_tier(u, static_cast<MarketCapTier>(9)), Error);
    const auto empty = screen_tier(u, MarketCapTier::Nano);
    CHECK(empty.buys.empty());
    CHECK(empty.sells.empty());
}

TEST_CASE("screen_all_tiers") {
    Universe u(kAsOf);
    u.insert(stock("M1", 400e9, 30, 10, 20, 1));
    u.insert(stock("S1", 1e9, 12, 10, 0, 1));
    const auto all = screen_all_tiers(u);
    REQUIRE(all.size() == 6);
    int empty = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].tier == kTiersDescending[i]);
        CHECK(all[i] == screen_tier(u, kTiersDescending[i]));
        if (all[i].buys.empty() && all[i].sells.empty()) ++empty;
    }
    CHECK(empty == 4);
    for (const auto& r : screen_all_tiers(Universe(kAsOf))) CHECK((r.buys.empty() && r.sells.empty()));
}

TEST_CASE("property: soundness, completeness, ordering, disjointness, determinism") {
    graham::testing::SnapshotGenerator gen(17);
    const GrahamConstants c;
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto u = gen.universe(200, kAsOf);
        const auto tier = kTiersDescending[static_cast<std::size_t>(gen.uniform_int(0, 5))];
        const int top_n = gen.uniform_int(1, 15);
        const auto r = screen_tier(u, tier, c, top_n);
        const int gate = min_analysts_for_tier(tier);

        for (const auto& row : r.buys) {
            const auto* s = u.find(row.ticker);
            if (!s || classify_market_cap(s->market_cap_usd) != tier || s->analyst_count < gate ||
                row.ret_5y_annualized.value < c.buy_growth_threshold.value || s->past_growth_5y.value <= 0)
                ++failures;
        }
        for (const auto& row : r.sells) {
            const auto* s = u.find(row.ticker);
            if (!s || classify_market_cap(s->market_cap_usd) != tier || s->analyst_count < gate ||
                row.ret_5y_annualized.value >= 0)
                ++failures;
        }
        auto ordered = [](const std::vector<ScreenRow>& rows, bool desc) {
            for (std::size_t i = 1; i < rows.size(); ++i) {
                const double a = rows[i - 1].ret_5y_annualized.value, b = rows[i].ret_5y_annualized.value;
                if (desc ? a < b : a > b) return false;
                if (a == b && !(rows[i - 1].ticker < rows[i].ticker)) return false;
            }
            return true;
        };
        if (!ordered(r.buys, true) || !ordered(r.sells, false)) ++failures;

        std::set<std::string> buy_set;
        for (const auto& row : r.buys) buy_set.insert(row.ticker);
        for (const auto& row : r.sells)
            if (buy_set.count(row.ticker)) ++failures;

        const auto oracle = graham::testing::brute_force_screen(u, tier, c, top_n);
        if (r.buys != oracle.buys || r.sells != oracle.sells) ++failures;

        if (!(screen_tier(u, tier, c, top_n) == r)) ++failures;
    }
    CHECK(failures == 0);
}
