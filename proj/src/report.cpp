#include "graham/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace graham {

using nlohmann::ordered_json;

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

double round_half_away(double x, int decimals) {
    if (!std::isfinite(x)) return x;
    const double scale = std::pow(10.0, decimals);
    const double y = x * scale;
    const double nudged = y + std::copysign(std::max(std::abs(y), 1.0) * 1e-11, y);
    const double r = std::trunc(nudged + std::copysign(0.5, nudged));
    return r / scale + 0.0;  // + 0.0 turns -0 into 0
}

std::string format_fixed(double x, int decimals) {
    if (!std::isfinite(x)) return "n/a";
    double r = round_half_away(x, decimals);
    if (r == 0.0) r = 0.0;
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, r, std::chars_format::fixed, decimals);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("n/a");
}

std::string format_percent(double x) {
    if (!std::isfinite(x)) return "n/a";
    const double r = round_half_away(x, 1);
    return r == std::trunc(r) ? format_fixed(r, 0) : format_fixed(r, 1);
}

std::string format_exact(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

namespace {

std::size_t display_width(std::string_view s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad_right(std::string_view s, std::size_t width) {
    std::string out(s);
    const auto w = display_width(s);
    if (w < width) out.append(width - w, ' ');
    return out;
}

std::string pad_left(std::string_view s, std::size_t width) {
    const auto w = display_width(s);
    std::string out;
    if (w < width) out.assign(width - w, ' ');
    out += s;
    return out;
}

std::string opt_percent(const std::optional<Percent>& p) {
    return p ? format_percent(p->value) : "n/a";
}

std::string csv_number(const std::optional<double>& v) { return v ? format_exact(*v) : ""; }

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

ordered_json json_number(const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json();
}

std::optional<double> value_of(const std::optional<Percent>& p) {
    return p ? std::optional<double>(p->value) : std::nullopt;
}

std::optional<double> value_of(const std::optional<MoneyPerShare>& m) {
    return m ? std::optional<double>(m->value) : std::nullopt;
}

std::string week_text(const RenderOptions& options, Date as_of) {
    return options.week_label ? *options.week_label : week_label_for(as_of);
}

// ---- valuation -----------------------------------------------------------

std::string valuation_text(const ValuationView& v, const RenderOptions& options) {
    const auto& s = *v.snapshot;
    const auto& r = v.report;
    const std::string ccy = s.currency.str();
    std::ostringstream os;
    os << s.ticker;
    if (!s.name.empty()) os << "  " << s.name;
    os << "  (as of " << format_iso_date(v.as_of) << ")\n";
    os << pad_right("Price", 24) << format_fixed(s.price.value, 2) << ' ' << ccy << '\n';
    os << pad_right("Growth estimate (5Y)", 24) << format_percent(s.growth_5y_est.value) << "%\n";
    os << pad_right("Past growth (5Y)", 24) << format_percent(s.past_growth_5y.value) << "%\n";
    auto eps_line = [&](std::string label, const std::optional<MoneyPerShare>& eps) {
        os << pad_right(label, 24) << (eps ? format_fixed(eps->value, 2) : "n/a") << '\n';
    };
    eps_line("EPS current year est", s.eps_fy0_est);
    eps_line("EPS next year est", s.eps_fy1_est);
    eps_line(v.eps_5y_year ? "EPS " + std::to_string(*v.eps_5y_year) + " trend" : "EPS horizon trend",
             v.eps_5y);
    os << '\n';
    os << pad_right("Horizon", 24) << pad_left("Intrinsic value", 16) << pad_left("Implied return", 16)
       << '\n';
    auto row = [&](std::string label, const std::optional<MoneyPerShare>& iv,
                   const std::optional<Percent>& ret) {
        os << pad_right(label, 24) << pad_left(iv ? format_fixed(iv->value, 2) : "n/a", 16)
           << pad_left(ret ? format_percent(ret->value) + "%" : "n/a", 16) << '\n';
    };
    row("0Y (current year)", r.intrinsic_value_0y, r.implied_return_0y);
    row("1Y (next year)", r.intrinsic_value_1y, r.implied_return_1y);
    row(std::to_string(r.horizon_years) + "Y (annualized)", r.intrinsic_value_5y,
        r.implied_return_5y_annualized);
    os << '\n' << kDisclaimer << '\n';
    if (!options.timestamp.empty()) os << options.timestamp << '\n';
    return os.str();
}

std::vector<std::pair<std::string, std::optional<double>>> valuation_fields(const ValuationView& v) {
    const auto& s = *v.snapshot;
    const auto& r = v.report;
    return {
        {"price", s.price.value},
        {"growth_5y_est_pct", s.growth_5y_est.value},
        {"past_growth_5y_pct", s.past_growth_5y.value},
        {"eps_fy0_est", value_of(s.eps_fy0_est)},
        {"eps_fy1_est", value_of(s.eps_fy1_est)},
        {"eps_5y", value_of(v.eps_5y)},
        {"intrinsic_value_0y", value_of(r.intrinsic_value_0y)},
        {"intrinsic_value_1y", value_of(r.intrinsic_value_1y)},
        {"intrinsic_value_5y", value_of(r.intrinsic_value_5y)},
        {"implied_return_0y", value_of(r.implied_return_0y)},
        {"implied_return_1y", value_of(r.implied_return_1y)},
        {"implied_return_5y_annualized", value_of(r.implied_return_5y_annualized)},
    };
}

// ---- screens -------------------------------------------------------------

constexpr std::string_view kScreenColumns[] = {"5Y%", "1Y%", "0Y%", "P5%", "AN#", "CR"};
constexpr std::size_t kNumWidth = 6;

std::vector<std::string> screen_cells(const ScreenRow& row) {
    return {format_percent(row.ret_5y_annualized.value),
            opt_percent(row.ret_1y),
            opt_percent(row.ret_0y),
            format_percent(row.past_growth_5y.value),
            std::to_string(row.analyst_count),
            format_percent(row.current_ratio)};
}

std::string screen_side(const std::vector<ScreenRow>& rows, std::size_t i, std::size_t label_width,
                        const std::vector<std::size_t>& widths) {
    std::string out;
    if (i < rows.size()) {
        out = pad_right(rows[i].ticker, label_width);
        const auto cells = screen_cells(rows[i]);
        for (std::size_t c = 0; c < cells.size(); ++c) out += pad_left(cells[c], widths[c]);
    } else {
        out.assign(label_width, ' ');
        for (auto w : widths) out.append(w, ' ');
    }
    return out;
}

std::string screens_text(const std::vector<ScreenResult>& screens, const RenderOptions& options) {
    std::ostringstream os;
    for (const auto& screen : screens) {
        std::size_t label_width = 8;
        for (const auto* side : {&screen.buys, &screen.sells})
            for (const auto& row : *side) label_width = std::max(label_width, row.ticker.size() + 2);
        // Columns widen to fit their longest cell, shared by both sides.
        std::vector<std::size_t> widths(std::size(kScreenColumns), kNumWidth);
        for (const auto* side : {&screen.buys, &screen.sells})
            for (const auto& row : *side) {
                const auto cells = screen_cells(row);
                for (std::size_t c = 0; c < cells.size(); ++c)
                    widths[c] = std::max(widths[c], display_width(cells[c]) + 2);
            }

        os << '(' << week_text(options, screen.as_of) << ") Graham's Growth "
           << tier_title(screen.tier) << " Buy/Sell\n\n";
        std::string buy_head = pad_right("▲BUY", label_width);
        std::string sell_head = pad_right("▼SELL", label_width);
        for (std::size_t c = 0; c < widths.size(); ++c) {
            buy_head += pad_left(kScreenColumns[c], widths[c]);
            sell_head += pad_left(kScreenColumns[c], widths[c]);
        }
        os << buy_head << " | " << sell_head << '\n';
        const std::size_t n = std::max(screen.buys.size(), screen.sells.size());
        for (std::size_t i = 0; i < n; ++i) {
            std::string line = screen_side(screen.buys, i, label_width, widths) + " | " +
                               screen_side(screen.sells, i, label_width, widths);
            line.erase(line.find_last_not_of(' ') + 1);
            os << line << '\n';
        }
        os << '\n';
    }
    os << kScreenLegend << '\n' << kDisclaimer << '\n';
    if (!options.timestamp.empty()) os << options.timestamp << '\n';
    return os.str();
}

ordered_json screen_row_json(const ScreenRow& row) {
    ordered_json j;
    j["ticker"] = row.ticker;
    j["ret_5y_annualized"] = row.ret_5y_annualized.value;
    j["ret_1y"] = json_number(value_of(row.ret_1y));
    j["ret_0y"] = json_number(value_of(row.ret_0y));
    j["past_growth_5y"] = row.past_growth_5y.value;
    j["analyst_count"] = row.analyst_count;
    j["current_ratio"] = row.current_ratio;
    return j;
}

std::string screens_json(const std::vector<ScreenResult>& screens, const RenderOptions& options) {
    ordered_json doc;
    if (!screens.empty()) doc["as_of"] = format_iso_date(screens.front().as_of);
    if (!options.timestamp.empty()) doc["generated_at"] = options.timestamp;
    ordered_json arr = ordered_json::array();
    for (const auto& screen : screens) {
        ordered_json j;
        j["tier"] = std::string(tier_name(screen.tier));
        j["week_label"] = week_text(options, screen.as_of);
        ordered_json buys = ordered_json::array(), sells = ordered_json::array();
        for (const auto& r : screen.buys) buys.push_back(screen_row_json(r));
        for (const auto& r : screen.sells) sells.push_back(screen_row_json(r));
        j["buys"] = std::move(buys);
        j["sells"] = std::move(sells);
        const auto& d = screen.diagnostics;
        j["diagnostics"] = {{"in_tier", d.in_tier},
                            {"below_analyst_gate", d.below_analyst_gate},
                            {"valuation_unavailable", d.valuation_unavailable},
                            {"neither_buy_nor_sell", d.neither_buy_nor_sell}};
        arr.push_back(std::move(j));
    }
    doc["screens"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string screens_csv(const std::vector<ScreenResult>& screens, const RenderOptions& options) {
    std::ostringstream os;
    os << "tier,week_label,side,rank,ticker,ret_5y_annualized,ret_1y,ret_0y,past_growth_5y,"
          "analyst_count,current_ratio\n";
    for (const auto& screen : screens) {
        auto emit = [&](std::string_view side, const std::vector<ScreenRow>& rows) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& r = rows[i];
                os << tier_name(screen.tier) << ',' << csv_field(week_text(options, screen.as_of))
                   << ',' << side << ',' << (i + 1) << ',' << csv_field(r.ticker) << ','
                   << format_exact(r.ret_5y_annualized.value) << ','
                   << csv_number(value_of(r.ret_1y)) << ',' << csv_number(value_of(r.ret_0y))
                   << ',' << format_exact(r.past_growth_5y.value) << ',' << r.analyst_count << ','
                   << format_exact(r.current_ratio) << '\n';
            }
        };
        emit("buy", screen.buys);
        emit("sell", screen.sells);
    }
    return os.str();
}

// ---- summary -------------------------------------------------------------

constexpr std::string_view kSummaryColumns[] = {"W5Y%", "WP5%", "#'s"};

std::string summary_side(const std::optional<SummaryRow>& row, std::size_t label_width) {
    if (!row) return std::string(label_width + 6 * std::size(kSummaryColumns), ' ');
    return pad_right(row->group_name.empty() ? "-" : row->group_name, label_width) +
           pad_left(format_percent(row->weighted_5y_est.value), 6) +
           pad_left(format_percent(row->weighted_past_5y.value), 6) +
           pad_left(std::to_string(row->count), 6);
}

std::string summary_head(std::string_view label, std::size_t label_width) {
    std::string out = pad_right(label, label_width);
    for (auto c : kSummaryColumns) out += pad_left(c, 6);
    return out;
}

std::string summary_text(const SummaryView& v, const RenderOptions& options) {
    // Each block is a column of rows; the total row closes the last block.
    struct Block {
        std::string_view label;
        std::vector<std::optional<SummaryRow>> rows;
    };
    std::vector<Block> blocks;
    if (v.sectors) {
        Block b{"Sector", {}};
        for (const auto& r : *v.sectors) b.rows.emplace_back(r);
        blocks.push_back(std::move(b));
    }
    if (v.industries) {
        Block b{"Industry", {}};
        for (const auto& r : *v.industries) b.rows.emplace_back(r);
        blocks.push_back(std::move(b));
    }
    if (blocks.empty()) blocks.push_back({"Group", {}});
    if (v.total) blocks.back().rows.emplace_back(*v.total);

    std::vector<std::size_t> widths;
    std::size_t height = 0;
    for (const auto& b : blocks) {
        std::size_t w = std::max<std::size_t>(display_width(b.label), 12);
        for (const auto& r : b.rows)
            if (r) w = std::max(w, display_width(r->group_name));
        widths.push_back(w + 2);
        height = std::max(height, b.rows.size());
    }

    std::ostringstream os;
    os << '(' << week_text(options, v.as_of) << ")\n\nGraham's Growth Summary\n\n";
    std::string head;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) head += " | ";
        head += summary_head(blocks[b].label, widths[b]);
    }
    os << head << '\n';
    for (std::size_t i = 0; i < height; ++i) {
        std::string line;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (b) line += " | ";
            // The total row sits at the bottom of the last block.
            const auto& rows = blocks[b].rows;
            std::optional<SummaryRow> cell;
            const bool last = b + 1 == blocks.size();
            if (last && v.total && !rows.empty()) {
                if (i + 1 == height) cell = rows.back();
                else if (i + 1 < rows.size()) cell = rows[i];
            } else if (i < rows.size()) {
                cell = rows[i];
            }
            line += summary_side(cell, widths[b]);
        }
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << '\n';
    }
    os << "\nW5Y%: Weighted 5-Year Ann Ret Est, WP5%: Weighted Past 5Y Ret, #'s: Number of Stocks, "
          "we only select >="
       << v.min_analysts << " analysts\n"
       << kDisclaimer << '\n';
    if (!options.timestamp.empty()) os << options.timestamp << '\n';
    return os.str();
}

ordered_json summary_row_json(const SummaryRow& r) {
    return {{"group", r.group_name},
            {"weighted_5y_est", r.weighted_5y_est.value},
            {"weighted_past_5y", r.weighted_past_5y.value},
            {"count", r.count}};
}

std::string summary_json(const SummaryView& v, const RenderOptions& options) {
    ordered_json doc;
    doc["as_of"] = format_iso_date(v.as_of);
    doc["week_label"] = week_text(options, v.as_of);
    if (!options.timestamp.empty()) doc["generated_at"] = options.timestamp;
    doc["min_analysts"] = v.min_analysts;
    auto rows = [](const std::vector<SummaryRow>& rs) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rs) arr.push_back(summary_row_json(r));
        return arr;
    };
    if (v.sectors) doc["sectors"] = rows(*v.sectors);
    if (v.industries) doc["industries"] = rows(*v.industries);
    doc["all"] = v.total ? summary_row_json(*v.total) : ordered_json();
    return doc.dump(2) + "\n";
}

std::string summary_csv(const SummaryView& v) {
    std::ostringstream os;
    os << "block,group,weighted_5y_est,weighted_past_5y,count\n";
    auto emit = [&](std::string_view block, const SummaryRow& r) {
        os << block << ',' << csv_field(r.group_name) << ',' << format_exact(r.weighted_5y_est.value)
           << ',' << format_exact(r.weighted_past_5y.value) << ',' << r.count << '\n';
    };
    if (v.sectors)
        for (const auto& r : *v.sectors) emit("sector", r);
    if (v.industries)
        for (const auto& r : *v.industries) emit("industry", r);
    if (v.total) emit("all", *v.total);
    return os.str();
}

}  // namespace

std::string render_valuation(const ValuationView& view, OutputFormat format,
                             const RenderOptions& options) {
    const auto& s = *view.snapshot;
    switch (format) {
    case OutputFormat::Text: return valuation_text(view, options);
    case OutputFormat::Csv: {
        std::string head = "ticker,as_of,currency", row;
        row = csv_field(s.ticker) + ',' + format_iso_date(view.as_of) + ',' + s.currency.str();
        for (const auto& [k, val] : valuation_fields(view)) {
            head += ',' + k;
            row += ',' + csv_number(val);
        }
        return head + '\n' + row + '\n';
    }
    case OutputFormat::Json: {
        ordered_json j;
        j["ticker"] = s.ticker;
        j["as_of"] = format_iso_date(view.as_of);
        j["currency"] = s.currency.str();
        if (!options.timestamp.empty()) j["generated_at"] = options.timestamp;
        for (const auto& [k, val] : valuation_fields(view)) j[k] = json_number(val);
        j["eps_5y_year"] = view.eps_5y_year ? ordered_json(*view.eps_5y_year) : ordered_json();
        j["horizon_years"] = view.report.horizon_years;
        return j.dump(2) + "\n";
    }
    }
    return {};
}

std::string render_screens(const std::vector<ScreenResult>& screens, OutputFormat format,
                           const RenderOptions& options) {
    switch (format) {
    case OutputFormat::Text: return screens_text(screens, options);
    case OutputFormat::Csv: return screens_csv(screens, options);
    case OutputFormat::Json: return screens_json(screens, options);
    }
    return {};
}

std::string render_summary(const SummaryView& view, OutputFormat format,
                           const RenderOptions& options) {
    switch (format) {
    case OutputFormat::Text: return summary_text(view, options);
    case OutputFormat::Csv: return summary_csv(view);
    case OutputFormat::Json: return summary_json(view, options);
    }
    return {};
}

GrowthTable build_growth_table(std::vector<double> rates, int years, double principal) {
    if (years < 1) throw Error(ErrorKind::InvalidInput, "years must be >= 1");
    if (rates.empty()) throw Error(ErrorKind::InvalidInput, "at least one rate is required");
    GrowthTable t;
    t.rates = std::move(rates);
    t.years = years;
    t.principal = principal;
    for (int y = 1; y <= years; ++y) {
        std::vector<double> row;
        for (double rate : t.rates)
            row.push_back(round_half_away(compound_value(principal, Percent{rate}, y), 2));
        t.cells.push_back(std::move(row));
    }
    return t;
}

std::string render_growth_table(const GrowthTable& t, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Text: {
        std::vector<std::string> heads;
        std::size_t width = 8;
        for (double r : t.rates) heads.push_back(format_percent(r) + "%");
        for (const auto& row : t.cells)
            for (double c : row) width = std::max(width, format_fixed(c, 2).size() + 2);
        os << "Compounded growth of " << format_fixed(t.principal, 2) << '\n';
        os << pad_right("Year", 6);
        for (const auto& h : heads) os << pad_left(h, width);
        os << '\n';
        for (int y = 1; y <= t.years; ++y) {
            os << pad_right(std::to_string(y), 6);
            for (double c : t.cells[static_cast<std::size_t>(y - 1)]) os << pad_left(format_fixed(c, 2), width);
            os << '\n';
        }
        break;
    }
    case OutputFormat::Csv: {
        os << "year";
        for (double r : t.rates) os << ',' << format_exact(r);
        os << '\n';
        for (int y = 1; y <= t.years; ++y) {
            os << y;
            for (double c : t.cells[static_cast<std::size_t>(y - 1)]) os << ',' << format_fixed(c, 2);
            os << '\n';
        }
        break;
    }
    case OutputFormat::Json: {
        ordered_json doc;
        doc["principal"] = t.principal;
        doc["rates"] = t.rates;
        ordered_json rows = ordered_json::array();
        for (int y = 1; y <= t.years; ++y)
            rows.push_back({{"year", y}, {"values", t.cells[static_cast<std::size_t>(y - 1)]}});
        doc["rows"] = std::move(rows);
        return doc.dump(2) + "\n";
    }
    }
    return os.str();
}

}  // namespace graham
