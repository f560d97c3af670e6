#pragma once

#include <optional>
#include <string>

#include "graham/core_model.hpp"

namespace graham {

/// Fair P/E for growth `g`: base_pe + growth_multiplier * g. Not clamped;
/// strongly negative growth yields a negative multiplier.
double graham_multiplier(Percent g, const GrahamConstants& constants = {});

/// Intrinsic value (base_pe + growth_multiplier * g) * eps, in eps's currency.
/// Throws NotMeaningful when eps <= 0 and InvalidInput for non-finite g.
MoneyPerShare graham_intrinsic_value(Percent g, MoneyPerShare eps,
                                     const GrahamConstants& constants = {});

/// principal * (1 + rate/100)^years. Requires rate > -100 and years >= 0.
double compound_value(double principal, Percent rate, int years);

/// Geometric annual rate taking `start` to `end` over `years`.
/// Inverse of compound_value.
Percent annualized_return(double start, double end, int years);

/// Per-stock Graham estimates and the returns they imply against price.
/// A horizon whose earnings input is non-positive or absent is nullopt.
struct ValuationReport {
    std::string ticker;
    MoneyPerShare price;
    std::optional<MoneyPerShare> intrinsic_value_0y;
    std::optional<MoneyPerShare> intrinsic_value_1y;
    std::optional<MoneyPerShare> intrinsic_value_5y;
    std::optional<Percent> implied_return_0y;
    std::optional<Percent> implied_return_1y;
    std::optional<Percent> implied_return_5y_annualized;
    int horizon_years = 5;

    friend bool operator==(const ValuationReport&, const ValuationReport&) = default;
};

/// All three horizons share the consensus growth_5y_est and differ only in
/// earnings: fy0 forecast, fy1 forecast, and `eps_5y` (the extrapolated
/// horizon EPS). Throws ValuationUnavailable if no horizon has positive EPS.
ValuationReport build_valuation_report(const StockSnapshot& snapshot,
                                       std::optional<MoneyPerShare> eps_5y,
                                       const GrahamConstants& constants = {});

}  // namespace graham
