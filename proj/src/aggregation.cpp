#include "graham/aggregation.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "graham/pipeline.hpp"

namespace graham {

std::optional<GroupBy> parse_group_by(std::string_view name) noexcept {
    if (name == "sector") return GroupBy::Sector;
    if (name == "industry") return GroupBy::Industry;
    if (name == "all") return GroupBy::All;
    return std::nullopt;
}

namespace {

struct Accumulator {
    long double cap_sum = 0.0L;
    long double fwd_sum = 0.0L;
    long double past_sum = 0.0L;
    double fwd_min = std::numeric_limits<double>::infinity();
    double fwd_max = -std::numeric_limits<double>::infinity();
    double past_min = std::numeric_limits<double>::infinity();
    double past_max = -std::numeric_limits<double>::infinity();
    int count = 0;

    void add(double cap, double fwd, double past) {
        cap_sum += cap;
        fwd_sum += static_cast<long double>(cap) * fwd;
        past_sum += static_cast<long double>(cap) * past;
        fwd_min = std::min(fwd_min, fwd);
        fwd_max = std::max(fwd_max, fwd);
        past_min = std::min(past_min, past);
        past_max = std::max(past_max, past);
        ++count;
    }
};

// The exact weighted mean lies in [lo, hi]; rounding must not push it out.
double bounded_mean(long double weighted, long double weight, double lo, double hi) {
    return std::clamp(static_cast<double>(weighted / weight), lo, hi);
}

}  // namespace

SummaryTable summarize(const Universe& universe, GroupBy group_by,
                       const GrahamConstants& constants) {
    constants.validate();

    // std::map fixes the combine order independent of input order.
    std::map<std::string, Accumulator> groups;
    for (const auto& s : universe.snapshots()) {
        if (s.analyst_count < constants.summary_min_analysts) continue;
        const auto outcome = value_snapshot(s, universe.as_of(), constants);
        if (!outcome.has_5y()) continue;

        std::string key;
        switch (group_by) {
        case GroupBy::Sector: key = s.sector; break;
        case GroupBy::Industry: key = s.industry; break;
        case GroupBy::All: key = std::string(kAllSectorsLabel); break;
        }
        groups[key].add(s.market_cap_usd, outcome.report->implied_return_5y_annualized->value,
                        s.past_growth_5y.value);
    }

    SummaryTable table;
    for (const auto& [name, acc] : groups) {
        if (acc.cap_sum <= 0.0L) {
            table.degenerate_groups.push_back(name);
            continue;
        }
        table.rows.push_back(
            {name, Percent{bounded_mean(acc.fwd_sum, acc.cap_sum, acc.fwd_min, acc.fwd_max)},
             Percent{bounded_mean(acc.past_sum, acc.cap_sum, acc.past_min, acc.past_max)},
             acc.count});
    }
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const SummaryRow& a, const SummaryRow& b) {
                         if (a.count != b.count) return a.count > b.count;
                         return a.group_name < b.group_name;
                     });
    return table;
}

}  // namespace graham
