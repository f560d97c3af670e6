#pragma once

// Number formatting and table renderers for the text, csv and json outputs.

#include <optional>
#include <string>
#include <vector>

#include "graham/aggregation.hpp"
#include "graham/core_model.hpp"
#include "graham/screener.hpp"
#include "graham/valuation.hpp"

namespace graham {

enum class OutputFormat { Text, Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept;

/// Rounds half away from zero at `decimals` places. A relative nudge of
/// 1e-11 absorbs binary representation error so 5708.7599999... -> 5708.76.
double round_half_away(double x, int decimals);

std::string format_fixed(double x, int decimals);
/// Integer when the value rounds to a whole number at one decimal, else one decimal.
std::string format_percent(double x);
/// Shortest text that parses back to exactly `x`.
std::string format_exact(double x);

inline constexpr std::string_view kDisclaimer =
    "These are predictions based on Earnings & Growth and intended for information purposes only";
inline constexpr std::string_view kScreenLegend =
    "5Y%: 5-Year Ann Ret Est, 1Y%: 1-Year Ret Est, 0Y%: Curr Year Ret Est, P5%: Past 5Y Ret, "
    "AN#: Curr Year # of Analysts, CR: Current Ratio";

/// Shared rendering options. `timestamp` is the generation time line; empty
/// suppresses it.
struct RenderOptions {
    std::string timestamp;
    std::optional<std::string> week_label;  // overrides the as_of ISO week
};

/// Inputs and results for one valued stock.
struct ValuationView {
    const StockSnapshot* snapshot = nullptr;
    ValuationReport report;
    std::optional<MoneyPerShare> eps_5y;
    std::optional<int> eps_5y_year;
    Date as_of;
};

std::string render_valuation(const ValuationView& view, OutputFormat format,
                             const RenderOptions& options);

std::string render_screens(const std::vector<ScreenResult>& screens, OutputFormat format,
                           const RenderOptions& options);

/// Summary blocks to render; unset blocks are omitted. `total` is the
/// "All Sectors" row.
struct SummaryView {
    std::optional<std::vector<SummaryRow>> sectors;
    std::optional<std::vector<SummaryRow>> industries;
    std::optional<SummaryRow> total;
    int min_analysts = 10;
    Date as_of;
};

std::string render_summary(const SummaryView& view, OutputFormat format,
                           const RenderOptions& options);

struct GrowthTable {
    std::vector<double> rates;
    int years = 0;
    double principal = 100.0;
    std::vector<std::vector<double>> cells;  // [year-1][rate], rounded to cents
};

/// Fills cells via compound_value; throws InvalidInput for bad inputs.
GrowthTable build_growth_table(std::vector<double> rates, int years, double principal);

std::string render_growth_table(const GrowthTable& table, OutputFormat format);

}  // namespace graham
