#include "graham/forecast.hpp"

#include <cmath>
#include <string>

namespace graham {

LinearFit fit_eps_trend(std::span<const EpsPoint> points) {
    if (points.size() < 2)
        throw Error(ErrorKind::InsufficientData, "trend fit needs at least two points");

    int base_year = points.front().fiscal_year;
    bool distinct = false;
    for (const auto& p : points) {
        if (p.fiscal_year != points.front().fiscal_year) distinct = true;
        if (p.fiscal_year < base_year) base_year = p.fiscal_year;
        if (p.eps.currency != points.front().eps.currency)
            throw Error(ErrorKind::InvalidInput, "trend fit over mixed currencies");
        if (!std::isfinite(p.eps.value)) throw Error(ErrorKind::InvalidInput, "non-finite eps");
    }
    if (!distinct)
        throw Error(ErrorKind::InsufficientData, "trend fit needs at least two distinct years");

    // Centered sums keep the normal equations well conditioned.
    const double n = static_cast<double>(points.size());
    double sum_x = 0.0, sum_y = 0.0;
    for (const auto& p : points) {
        sum_x += p.fiscal_year - base_year;
        sum_y += p.eps.value;
    }
    const double mean_x = sum_x / n;
    const double mean_y = sum_y / n;

    double sxx = 0.0, sxy = 0.0;
    for (const auto& p : points) {
        const double dx = (p.fiscal_year - base_year) - mean_x;
        sxx += dx * dx;
        sxy += dx * (p.eps.value - mean_y);
    }

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    fit.n_points = static_cast<int>(points.size());
    fit.base_year = base_year;
    fit.currency = points.front().eps.currency;
    for (const auto& p : points) {
        const double r = p.eps.value - (fit.intercept + fit.slope * (p.fiscal_year - base_year));
        fit.sse += r * r;
    }
    return fit;
}

int current_fiscal_year(const StockSnapshot& snapshot, Date as_of) {
    if (snapshot.eps_history.empty()) return static_cast<int>(as_of.year());
    return snapshot.eps_history.back().fiscal_year + 1;
}

std::vector<EpsPoint> assemble_fit_points(const StockSnapshot& snapshot, Date as_of) {
    std::vector<EpsPoint> points = snapshot.eps_history;
    const int fy0 = current_fiscal_year(snapshot, as_of);
    if (snapshot.eps_fy0_est) points.push_back({fy0, *snapshot.eps_fy0_est});
    if (snapshot.eps_fy1_est) points.push_back({fy0 + 1, *snapshot.eps_fy1_est});

    bool distinct = false;
    for (const auto& p : points) distinct = distinct || p.fiscal_year != points.front().fiscal_year;
    if (!distinct)
        throw Error(ErrorKind::InsufficientData,
                    snapshot.ticker + ": fewer than two distinct EPS years");
    return points;
}

MoneyPerShare extrapolate_eps(const LinearFit& fit, int target_year) {
    if (target_year < fit.base_year)
        throw Error(ErrorKind::InvalidInput,
                    "target year " + std::to_string(target_year) + " precedes base year");
    return {fit.intercept + fit.slope * (target_year - fit.base_year), fit.currency};
}

MoneyPerShare eps_horizon_estimate(const StockSnapshot& snapshot, Date as_of,
                                   const GrahamConstants& constants) {
    const auto points = assemble_fit_points(snapshot, as_of);
    const LinearFit fit = fit_eps_trend(points);
    return extrapolate_eps(fit, current_fiscal_year(snapshot, as_of) + constants.horizon_years);
}

}  // namespace graham
