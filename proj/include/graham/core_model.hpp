#pragma once

// Shared domain types for the valuation and screening pipeline.

#include <array>
#include <chrono>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graham/error.hpp"

namespace graham {

/// Percentage points: 15 means 15%. Negative values are legal.
struct Percent {
    double value = 0.0;

    constexpr Percent() = default;
    constexpr explicit Percent(double v) : value(v) {}

    friend constexpr auto operator<=>(const Percent&, const Percent&) = default;
};

/// ISO-4217 currency code, three upper-case ASCII letters.
class Currency {
public:
    constexpr Currency() : code_{'U', 'S', 'D'} {}

    /// Returns nullopt unless `code` is exactly three letters A-Z.
    static std::optional<Currency> parse(std::string_view code) noexcept;

    std::string_view code() const noexcept { return {code_.data(), code_.size()}; }
    std::string str() const { return std::string(code()); }

    friend bool operator==(const Currency&, const Currency&) = default;

private:
    std::array<char, 3> code_;
};

struct MoneyPerShare {
    double value = 0.0;
    Currency currency;

    friend bool operator==(const MoneyPerShare&, const MoneyPerShare&) = default;
};

struct EpsPoint {
    int fiscal_year = 0;
    MoneyPerShare eps;

    friend bool operator==(const EpsPoint&, const EpsPoint&) = default;
};

/// Tunable constants of the growth-stock formula and screening rules.
/// Defaults are the published parameters.
struct GrahamConstants {
    double base_pe = 8.5;
    double growth_multiplier = 2.0;
    Percent buy_growth_threshold{15.0};
    int horizon_years = 5;
    int summary_min_analysts = 10;

    /// Throws Error(InvalidInput) if any invariant is violated.
    void validate() const;

    friend bool operator==(const GrahamConstants&, const GrahamConstants&) = default;
};

struct StockSnapshot {
    std::string ticker;
    std::string name;
    std::string sector;
    std::string industry;
    Currency currency;
    MoneyPerShare price;
    double market_cap_usd = 0.0;
    int analyst_count = 0;
    Percent growth_5y_est;
    Percent past_growth_5y;
    std::vector<EpsPoint> eps_history;  // strictly increasing fiscal years
    std::optional<MoneyPerShare> eps_fy0_est;
    std::optional<MoneyPerShare> eps_fy1_est;
    double current_ratio = 0.0;

    friend bool operator==(const StockSnapshot&, const StockSnapshot&) = default;
};

/// Reasons a record can fail validation. Closed set.
enum class RejectReason {
    MissingField,
    NonPositivePrice,
    NegativeCap,
    BadYearOrder,
    NonFiniteNumber,
    BadCurrencyCode,
    DuplicateTicker,
};

std::string_view to_string(RejectReason reason) noexcept;

/// Checks every StockSnapshot invariant; nullopt means valid.
std::optional<RejectReason> check_snapshot(const StockSnapshot& s) noexcept;

using Date = std::chrono::year_month_day;

std::optional<Date> parse_iso_date(std::string_view text) noexcept;
std::string format_iso_date(Date d);
/// ISO-8601 week number (1..53).
int iso_week(Date d);

/// Point-in-time set of validated snapshots, unique by ticker, kept in
/// insertion order.
class Universe {
public:
    Universe() = default;
    explicit Universe(Date as_of) : as_of_(as_of) {}

    Date as_of() const noexcept { return as_of_; }

    /// Adds a snapshot. Returns the rejection reason instead if the
    /// snapshot is invalid or its ticker is already present.
    std::optional<RejectReason> insert(StockSnapshot snapshot);

    const std::vector<StockSnapshot>& snapshots() const noexcept { return snapshots_; }
    const StockSnapshot* find(std::string_view ticker) const;
    std::size_t size() const noexcept { return snapshots_.size(); }
    bool empty() const noexcept { return snapshots_.empty(); }

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.as_of_ == b.as_of_ && a.snapshots_ == b.snapshots_;
    }

private:
    Date as_of_{std::chrono::year{1970}, std::chrono::January, std::chrono::day{1}};
    std::vector<StockSnapshot> snapshots_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace graham
