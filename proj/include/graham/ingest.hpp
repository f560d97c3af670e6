#pragma once

// Snapshot file formats.
//
// JSON (canonical):
//   { "as_of": "YYYY-MM-DD",
//     "stocks": [ { "ticker", "name", "sector", "industry", "currency",
//                   "price", "market_cap_usd", "analyst_count",
//                   "growth_5y_est_pct", "past_growth_5y_pct", "current_ratio",
//                   "eps_history": [ {"year", "eps"}, ... ],
//                   "eps_fy0_est", "eps_fy1_est" } ] }
//   eps_fy0_est / eps_fy1_est may be null.
//
// CSV: RFC 4180, comma-delimited, UTF-8. A preamble line "# as_of: YYYY-MM-DD"
// precedes the mandatory header. EPS history is flattened as eps_year1 (the
// oldest fiscal year) plus eps_y1..eps_yN, oldest first. Empty cells are
// absent values.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graham/core_model.hpp"

namespace graham {

enum class SnapshotFormat { Csv, Json };

std::optional<SnapshotFormat> parse_snapshot_format(std::string_view name) noexcept;

/// One record as read from a file, prior to validation. Keys absent from
/// `fields` are missing values.
struct RawRecord {
    struct EpsCell {
        std::string year;
        std::string eps;
    };

    std::size_t id = 0;  // 1-based record number within the file
    std::map<std::string, std::string> fields;
    std::vector<EpsCell> eps_history;
    std::string malformed;  // structural problem found by the reader
};

struct Rejection {
    std::size_t record = 0;
    std::string ticker;  // may be empty if the ticker itself was missing
    RejectReason reason = RejectReason::MissingField;
    std::string detail;
};

struct IngestReport {
    std::size_t accepted = 0;
    std::vector<Rejection> rejected;
    Date as_of;

    std::size_t total() const noexcept { return accepted + rejected.size(); }
    bool empty_universe() const noexcept { return accepted == 0; }
};

struct LoadResult {
    Universe universe;
    IngestReport report;
};

using ValidationResult = std::variant<StockSnapshot, Rejection>;

/// Parses and checks a raw record. Never throws for bad data.
ValidationResult validate_record(const RawRecord& raw);

/// Throws Error(Io) if unreadable and Error(Schema) for a malformed file
/// header. Bad records are itemized in the report; duplicates keep the first.
/// Format is inferred from the extension (then content) when not given.
LoadResult load_universe(const std::filesystem::path& path,
                         std::optional<SnapshotFormat> format = std::nullopt);
LoadResult load_universe(std::istream& in, SnapshotFormat format);
LoadResult load_universe_from_string(std::string_view text, SnapshotFormat format);

/// Canonical JSON text for a universe; load_universe reproduces it exactly.
std::string universe_to_json(const Universe& universe, int indent = 2);

/// RFC 4180 row splitter, exposed for tests. Returns records of fields.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace graham
