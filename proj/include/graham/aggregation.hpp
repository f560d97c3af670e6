#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graham/core_model.hpp"

namespace graham {

enum class GroupBy { Sector, Industry, All };

std::optional<GroupBy> parse_group_by(std::string_view name) noexcept;

inline constexpr std::string_view kAllSectorsLabel = "All Sectors";

/// Market-cap weighted forward (implied 5Y annualized return) and trailing
/// growth for one group.
struct SummaryRow {
    std::string group_name;
    Percent weighted_5y_est;
    Percent weighted_past_5y;
    int count = 0;

    friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

struct SummaryTable {
    std::vector<SummaryRow> rows;  // count descending, then name
    /// Groups with eligible members whose caps sum to zero; no row emitted.
    std::vector<std::string> degenerate_groups;
};

/// Eligible stocks have analyst_count >= summary_min_analysts and a 5Y
/// return estimate. Weights are market caps.
SummaryTable summarize(const Universe& universe, GroupBy group_by,
                       const GrahamConstants& constants = {});

}  // namespace graham
