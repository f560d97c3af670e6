#include "graham/core_model.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace graham {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::NotMeaningful: return "not-meaningful";
    case ErrorKind::ValuationUnavailable: return "valuation-unavailable";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::DegenerateGroup: return "degenerate-group";
    case ErrorKind::Io: return "io-error";
    case ErrorKind::Schema: return "schema-error";
    }
    return "unknown";
}

std::optional<Currency> Currency::parse(std::string_view code) noexcept {
    if (code.size() != 3) return std::nullopt;
    Currency c;
    for (std::size_t i = 0; i < 3; ++i) {
        if (code[i] < 'A' || code[i] > 'Z') return std::nullopt;
        c.code_[i] = code[i];
    }
    return c;
}

void GrahamConstants::validate() const {
    auto fail = [](const char* msg) { throw Error(ErrorKind::InvalidInput, msg); };
    if (!std::isfinite(base_pe) || base_pe <= 0.0) fail("base_pe must be a finite value > 0");
    if (!std::isfinite(growth_multiplier) || growth_multiplier <= 0.0)
        fail("growth_multiplier must be a finite value > 0");
    if (!std::isfinite(buy_growth_threshold.value)) fail("buy_growth_threshold must be finite");
    if (horizon_years < 1) fail("horizon_years must be >= 1");
    if (summary_min_analysts < 0) fail("summary_min_analysts must be >= 0");
}

std::string_view to_string(RejectReason reason) noexcept {
    switch (reason) {
    case RejectReason::MissingField: return "missing-field";
    case RejectReason::NonPositivePrice: return "non-positive-price";
    case RejectReason::NegativeCap: return "negative-cap";
    case RejectReason::BadYearOrder: return "bad-year-order";
    case RejectReason::NonFiniteNumber: return "non-finite-number";
    case RejectReason::BadCurrencyCode: return "bad-currency-code";
    case RejectReason::DuplicateTicker: return "duplicate-ticker";
    }
    return "unknown";
}

std::optional<RejectReason> check_snapshot(const StockSnapshot& s) noexcept {
    if (s.ticker.empty()) return RejectReason::MissingField;

    bool finite = std::isfinite(s.price.value) && std::isfinite(s.market_cap_usd) &&
                  std::isfinite(s.growth_5y_est.value) && std::isfinite(s.past_growth_5y.value) &&
                  std::isfinite(s.current_ratio);
    for (const auto& p : s.eps_history) finite = finite && std::isfinite(p.eps.value);
    if (s.eps_fy0_est) finite = finite && std::isfinite(s.eps_fy0_est->value);
    if (s.eps_fy1_est) finite = finite && std::isfinite(s.eps_fy1_est->value);
    if (!finite) return RejectReason::NonFiniteNumber;

    bool same_currency = s.price.currency == s.currency;
    for (const auto& p : s.eps_history) same_currency = same_currency && p.eps.currency == s.currency;
    if (s.eps_fy0_est) same_currency = same_currency && s.eps_fy0_est->currency == s.currency;
    if (s.eps_fy1_est) same_currency = same_currency && s.eps_fy1_est->currency == s.currency;
    if (!same_currency) return RejectReason::BadCurrencyCode;

    if (s.price.value <= 0.0) return RejectReason::NonPositivePrice;
    if (s.market_cap_usd < 0.0) return RejectReason::NegativeCap;
    for (std::size_t i = 1; i < s.eps_history.size(); ++i) {
        if (s.eps_history[i].fiscal_year <= s.eps_history[i - 1].fiscal_year)
            return RejectReason::BadYearOrder;
    }
    // Out-of-domain counts and ratios share the malformed-number reason.
    if (s.analyst_count < 0 || s.current_ratio < 0.0) return RejectReason::NonFiniteNumber;
    return std::nullopt;
}

std::optional<Date> parse_iso_date(std::string_view text) noexcept {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    int y = 0;
    unsigned m = 0, d = 0;
    auto num = [&](std::size_t pos, std::size_t len, auto& out) {
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, out);
        return ec == std::errc{} && ptr == text.data() + pos + len;
    };
    if (!num(0, 4, y) || !num(5, 2, m) || !num(8, 2, d)) return std::nullopt;
    Date date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
    if (!date.ok()) return std::nullopt;
    return date;
}

std::string format_iso_date(Date d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
    return buf;
}

int iso_week(Date d) {
    using namespace std::chrono;
    const sys_days day{d};
    const unsigned iso_weekday = weekday{day}.iso_encoding();  // Mon=1..Sun=7
    const sys_days thursday = day - days{iso_weekday - 1} + days{3};
    const year thursday_year = year_month_day{thursday}.year();
    const sys_days jan1{thursday_year / January / 1};
    return static_cast<int>((thursday - jan1).count() / 7 + 1);
}

std::optional<RejectReason> Universe::insert(StockSnapshot snapshot) {
    if (auto bad = check_snapshot(snapshot)) return bad;
    if (index_.count(snapshot.ticker) != 0) return RejectReason::DuplicateTicker;
    index_.emplace(snapshot.ticker, snapshots_.size());
    snapshots_.push_back(std::move(snapshot));
    return std::nullopt;
}

const StockSnapshot* Universe::find(std::string_view ticker) const {
    auto it = index_.find(std::string(ticker));
    return it == index_.end() ? nullptr : &snapshots_[it->second];
}

}  // namespace graham
