#include "graham/pipeline.hpp"

#include "graham/forecast.hpp"

namespace graham {

ValuationOutcome value_snapshot(const StockSnapshot& snapshot, Date as_of,
                                const GrahamConstants& constants) {
    ValuationOutcome out;
    std::optional<MoneyPerShare> eps_5y;
    try {
        eps_5y = eps_horizon_estimate(snapshot, as_of, constants);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InsufficientData) throw;
    }
    try {
        out.report = build_valuation_report(snapshot, eps_5y, constants);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ValuationUnavailable) throw;
        out.failure = e.kind();
        out.message = e.what();
    }
    return out;
}

}  // namespace graham
