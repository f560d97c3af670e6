#pragma once

#include <span>
#include <vector>

#include "graham/core_model.hpp"

namespace graham {

/// Least-squares EPS trend, eps(year) = intercept + slope * (year - base_year).
struct LinearFit {
    double slope = 0.0;      // per year
    double intercept = 0.0;  // at base_year
    int n_points = 0;
    double sse = 0.0;        // sum of squared residuals
    int base_year = 0;       // earliest input year
    Currency currency;
};

/// Ordinary least squares over (year - base_year). Years need not be
/// consecutive or distinct, but at least two distinct years are required
/// (InsufficientData otherwise).
LinearFit fit_eps_trend(std::span<const EpsPoint> points);

/// Fiscal year assigned to the current-year forecast: one past the last
/// history year, or the as_of calendar year when there is no history.
int current_fiscal_year(const StockSnapshot& snapshot, Date as_of);

/// History followed by the fy0 and fy1 forecasts in year order.
/// Throws InsufficientData if fewer than two distinct years result.
std::vector<EpsPoint> assemble_fit_points(const StockSnapshot& snapshot, Date as_of);

/// Evaluates the trend line. `target_year` must not precede base_year.
MoneyPerShare extrapolate_eps(const LinearFit& fit, int target_year);

/// EPS extrapolated horizon_years past the current fiscal year.
MoneyPerShare eps_horizon_estimate(const StockSnapshot& snapshot, Date as_of,
                                   const GrahamConstants& constants = {});

}  // namespace graham
