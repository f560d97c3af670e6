#pragma once

#include <optional>
#include <string>

#include "graham/core_model.hpp"
#include "graham/valuation.hpp"

namespace graham {

/// Result of forecasting and valuing one snapshot. Exactly one of
/// `report` / `failure` is set.
struct ValuationOutcome {
    std::optional<ValuationReport> report;
    std::optional<ErrorKind> failure;
    std::string message;

    bool has_5y() const noexcept {
        return report && report->implied_return_5y_annualized.has_value();
    }
};

/// Extrapolates horizon EPS (a forecast failure only removes the 5Y
/// estimate) and builds the valuation report.
ValuationOutcome value_snapshot(const StockSnapshot& snapshot, Date as_of,
                                const GrahamConstants& constants = {});

}  // namespace graham
