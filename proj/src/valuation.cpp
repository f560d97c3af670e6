#include "graham/valuation.hpp"

#include <cmath>

namespace graham {

double graham_multiplier(Percent g, const GrahamConstants& constants) {
    if (!std::isfinite(g.value)) throw Error(ErrorKind::InvalidInput, "growth must be finite");
    return constants.base_pe + constants.growth_multiplier * g.value;
}

MoneyPerShare graham_intrinsic_value(Percent g, MoneyPerShare eps, const GrahamConstants& constants) {
    const double multiplier = graham_multiplier(g, constants);
    if (!std::isfinite(eps.value)) throw Error(ErrorKind::InvalidInput, "eps must be finite");
    if (eps.value <= 0.0)
        throw Error(ErrorKind::NotMeaningful, "intrinsic value needs positive earnings");
    return {multiplier * eps.value, eps.currency};
}

double compound_value(double principal, Percent rate, int years) {
    if (!std::isfinite(principal) || !std::isfinite(rate.value))
        throw Error(ErrorKind::InvalidInput, "principal and rate must be finite");
    if (rate.value <= -100.0) throw Error(ErrorKind::InvalidInput, "rate must be > -100%");
    if (years < 0) throw Error(ErrorKind::InvalidInput, "years must be >= 0");
    return principal * std::pow(1.0 + rate.value / 100.0, years);
}

Percent annualized_return(double start, double end, int years) {
    if (!std::isfinite(start) || start <= 0.0)
        throw Error(ErrorKind::InvalidInput, "start must be finite and > 0");
    if (!std::isfinite(end) || end < 0.0)
        throw Error(ErrorKind::InvalidInput, "end must be finite and >= 0");
    if (years < 1) throw Error(ErrorKind::InvalidInput, "years must be >= 1");
    return Percent{100.0 * (std::pow(end / start, 1.0 / years) - 1.0)};
}

namespace {

std::optional<MoneyPerShare> value_if_positive(Percent g, const std::optional<MoneyPerShare>& eps,
                                               const GrahamConstants& constants) {
    if (!eps || eps->value <= 0.0) return std::nullopt;
    return graham_intrinsic_value(g, *eps, constants);
}

Percent simple_return(double price, double value) {
    return Percent{100.0 * (value / price - 1.0)};
}

}  // namespace

ValuationReport build_valuation_report(const StockSnapshot& snapshot,
                                       std::optional<MoneyPerShare> eps_5y,
                                       const GrahamConstants& constants) {
    constants.validate();
    if (!(snapshot.price.value > 0.0))
        throw Error(ErrorKind::InvalidInput, snapshot.ticker + ": price must be > 0");

    ValuationReport r;
    r.ticker = snapshot.ticker;
    r.price = snapshot.price;
    r.horizon_years = constants.horizon_years;

    const Percent g = snapshot.growth_5y_est;
    r.intrinsic_value_0y = value_if_positive(g, snapshot.eps_fy0_est, constants);
    r.intrinsic_value_1y = value_if_positive(g, snapshot.eps_fy1_est, constants);
    r.intrinsic_value_5y = value_if_positive(g, eps_5y, constants);

    if (!r.intrinsic_value_0y && !r.intrinsic_value_1y && !r.intrinsic_value_5y)
        throw Error(ErrorKind::ValuationUnavailable,
                    snapshot.ticker + ": no horizon with positive earnings");

    const double price = snapshot.price.value;
    auto ret = [&](const std::optional<MoneyPerShare>& iv) -> std::optional<Percent> {
        if (!iv) return std::nullopt;
        return simple_return(price, iv->value);
    };
    r.implied_return_0y = ret(r.intrinsic_value_0y);
    r.implied_return_1y = ret(r.intrinsic_value_1y);
    // A negative multiplier (growth below -base_pe/growth_multiplier) gives a
    // negative value, which has no annualized return.
    if (r.intrinsic_value_5y && r.intrinsic_value_5y->value >= 0.0)
        r.implied_return_5y_annualized =
            annualized_return(price, r.intrinsic_value_5y->value, constants.horizon_years);
    return r;
}

}  // namespace graham
