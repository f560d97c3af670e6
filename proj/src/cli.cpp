#include "graham/cli.hpp"

#include <ctime>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graham/aggregation.hpp"
#include "graham/forecast.hpp"
#include "graham/ingest.hpp"
#include "graham/pipeline.hpp"
#include "graham/report.hpp"
#include "graham/screener.hpp"

namespace graham::cli {

namespace {

struct Config {
    std::string input_path;
    std::string format = "text";
    bool no_timestamp = false;
    std::string week_label;
    GrahamConstants constants;

    std::string ticker;
    std::string tier = "mega";
    int top_n = 10;
    std::string group;
    int top_industries = 0;
    std::vector<double> rates;
    int years = 0;
    double principal = 100.0;
};

struct UsageError {
    std::string message;
};

std::string now_timestamp() {
    const std::time_t t = std::time(nullptr);
    std::tm local{};
    localtime_r(&t, &local);
    char buf[64];
    std::strftime(buf, sizeof buf, "%a %b %d %H:%M:%S %Z %Y", &local);
    return buf;
}

OutputFormat output_format(const Config& cfg) {
    auto f = parse_output_format(cfg.format);
    if (!f) throw UsageError{"unknown --format '" + cfg.format + "' (text|csv|json)"};
    return *f;
}

RenderOptions render_options(const Config& cfg) {
    RenderOptions o;
    if (!cfg.no_timestamp) o.timestamp = now_timestamp();
    if (!cfg.week_label.empty()) o.week_label = cfg.week_label;
    return o;
}

Universe load(const Config& cfg, std::ostream& err) {
    if (cfg.input_path.empty())
        throw UsageError{"no input snapshot (use --input or set GRAHAM_INPUT)"};
    LoadResult loaded;
    try {
        loaded = load_universe(cfg.input_path);
    } catch (const Error& e) {
        throw UsageError{std::string(to_string(e.kind())) + ": " + e.what()};
    }
    for (const auto& r : loaded.report.rejected) {
        err << "ingest: record " << r.record;
        if (!r.ticker.empty()) err << " (" << r.ticker << ")";
        err << " rejected: " << to_string(r.reason);
        if (!r.detail.empty()) err << " [" << r.detail << "]";
        err << '\n';
    }
    if (loaded.report.empty_universe()) err << "ingest: warning: no records accepted\n";
    return std::move(loaded.universe);
}

int cmd_value(const Config& cfg, std::ostream& out, std::ostream& err) {
    const auto format = output_format(cfg);
    const Universe universe = load(cfg, err);
    const StockSnapshot* s = universe.find(cfg.ticker);
    if (!s) {
        err << "value: unknown ticker '" << cfg.ticker << "'\n";
        return kUsage;
    }
    const auto outcome = value_snapshot(*s, universe.as_of(), cfg.constants);
    if (!outcome.report) {
        err << "value: " << outcome.message << '\n';
        return kUnavailable;
    }
    ValuationView view;
    view.snapshot = s;
    view.report = *outcome.report;
    view.as_of = universe.as_of();
    try {
        view.eps_5y = eps_horizon_estimate(*s, universe.as_of(), cfg.constants);
        view.eps_5y_year = current_fiscal_year(*s, universe.as_of()) + cfg.constants.horizon_years;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InsufficientData) throw;
        err << "value: " << e.what() << '\n';
    }
    out << render_valuation(view, format, render_options(cfg));
    return kOk;
}

int cmd_screen(const Config& cfg, std::ostream& out, std::ostream& err) {
    const auto format = output_format(cfg);
    std::vector<MarketCapTier> tiers;
    if (cfg.tier == "all") {
        tiers.assign(kTiersDescending.begin(), kTiersDescending.end());
    } else if (auto t = parse_tier(cfg.tier)) {
        tiers.push_back(*t);
    } else {
        throw UsageError{"unknown tier '" + cfg.tier + "' (mega|big|mid|small|micro|nano|all)"};
    }
    if (cfg.top_n < 1) throw UsageError{"--top must be >= 1"};

    const Universe universe = load(cfg, err);
    std::vector<ScreenResult> screens;
    for (auto tier : tiers) screens.push_back(screen_tier(universe, tier, cfg.constants, cfg.top_n));
    for (const auto& s : screens) {
        const auto& d = s.diagnostics;
        err << "screen " << tier_name(s.tier) << ": " << d.in_tier << " in tier, "
            << d.below_analyst_gate << " below analyst gate, " << d.valuation_unavailable
            << " valuation unavailable, " << d.neither_buy_nor_sell << " neither buy nor sell\n";
    }
    out << render_screens(screens, format, render_options(cfg));
    return kOk;
}

int cmd_summary(const Config& cfg, std::ostream& out, std::ostream& err) {
    const auto format = output_format(cfg);
    std::optional<GroupBy> group;
    if (!cfg.group.empty()) {
        group = parse_group_by(cfg.group);
        if (!group) throw UsageError{"unknown group '" + cfg.group + "' (sector|industry|all)"};
    }
    if (cfg.top_industries < 0) throw UsageError{"--top-industries must be >= 0"};

    const Universe universe = load(cfg, err);
    auto compute = [&](GroupBy g) {
        auto table = summarize(universe, g, cfg.constants);
        for (const auto& name : table.degenerate_groups)
            err << "summary: degenerate-group '" << name << "' (market caps sum to zero)\n";
        return table.rows;
    };

    SummaryView view;
    view.as_of = universe.as_of();
    view.min_analysts = cfg.constants.summary_min_analysts;
    if (!group || *group == GroupBy::Sector) view.sectors = compute(GroupBy::Sector);
    if (!group || *group == GroupBy::Industry) {
        auto rows = compute(GroupBy::Industry);
        if (cfg.top_industries > 0 && rows.size() > static_cast<std::size_t>(cfg.top_industries))
            rows.resize(static_cast<std::size_t>(cfg.top_industries));
        view.industries = std::move(rows);
    }
    if (auto all = compute(GroupBy::All); !all.empty()) view.total = all.front();

    out << render_summary(view, format, render_options(cfg));
    return kOk;
}

int cmd_growth_table(const Config& cfg, std::ostream& out) {
    const auto format = output_format(cfg);
    if (cfg.years < 1) throw UsageError{"--years must be >= 1"};
    for (double r : cfg.rates)
        if (!(r > -100.0) || !std::isfinite(r))
            throw UsageError{"invalid rate " + format_exact(r) + " (must be > -100)"};
    out << render_growth_table(build_growth_table(cfg.rates, cfg.years, cfg.principal), format);
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Graham growth-stock valuation and screening"};
    app.name(argc > 0 ? argv[0] : "graham");
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--input", cfg.input_path, "Snapshot file (.json or .csv)")
        ->envname("GRAHAM_INPUT");
    app.add_option("--format", cfg.format, "Output format: text, csv or json");
    app.add_flag("--no-timestamp", cfg.no_timestamp, "Omit the generation timestamp");
    app.add_option("--week-label", cfg.week_label, "Override the week label, e.g. \"WK 11\"");
    app.add_option("--base-pe", cfg.constants.base_pe, "P/E of a zero-growth company");
    app.add_option("--growth-mult", cfg.constants.growth_multiplier, "P/E added per growth point");
    app.add_option("--buy-threshold", cfg.constants.buy_growth_threshold.value,
                   "Minimum 5Y% for the buy list");
    app.add_option("--horizon", cfg.constants.horizon_years, "Forecast horizon in years");
    app.add_option("--summary-min-analysts", cfg.constants.summary_min_analysts,
                   "Analyst floor for the summary");

    auto* value = app.add_subcommand("value", "Graham estimates for one ticker");
    value->add_option("ticker", cfg.ticker, "Ticker symbol")->required();

    auto* screen = app.add_subcommand("screen", "Buy/sell screen per market-cap tier");
    screen->add_option("--tier", cfg.tier, "mega|big|mid|small|micro|nano|all");
    screen->add_option("--top", cfg.top_n, "Rows per side");

    auto* summary = app.add_subcommand("summary", "Cap-weighted sector and industry growth");
    summary->add_option("--group", cfg.group, "sector|industry|all (default: sectors and industries)");
    summary->add_option("--top-industries", cfg.top_industries, "Keep the K largest industries");

    auto* growth = app.add_subcommand("growth-table", "Compounded growth table");
    growth->add_option("--rates", cfg.rates, "Comma-separated annual rates in percent")
        ->required()
        ->delimiter(',');
    growth->add_option("--years", cfg.years, "Number of years")->required();
    growth->add_option("--principal", cfg.principal, "Starting amount");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        cfg.constants.validate();
        if (*value) return cmd_value(cfg, out, err);
        if (*screen) return cmd_screen(cfg, out, err);
        if (*summary) return cmd_summary(cfg, out, err);
        if (*growth) return cmd_growth_table(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.message << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::ValuationUnavailable ? kUnavailable : kUsage;
    }
    return kUsage;
}

}  // namespace graham::cli
