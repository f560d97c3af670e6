#include "graham/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>

#include <json.hpp>

namespace graham {

using nlohmann::json;
using nlohmann::ordered_json;

std::optional<SnapshotFormat> parse_snapshot_format(std::string_view name) noexcept {
    if (name == "csv") return SnapshotFormat::Csv;
    if (name == "json") return SnapshotFormat::Json;
    return std::nullopt;
}

namespace {

constexpr std::string_view kRequiredFields[] = {
    "ticker",        "name",          "sector",           "industry",
    "currency",      "price",         "market_cap_usd",   "analyst_count",
    "growth_5y_est_pct", "past_growth_5y_pct", "current_ratio",
};

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

// Failure to parse is reported the same way as a non-finite value.
struct BadNumber {
    std::string field;
};

double parse_real(std::string_view field, std::string_view text) {
    text = trim(text);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
        throw BadNumber{std::string(field)};
    return v;
}

int parse_int(std::string_view field, std::string_view text) {
    text = trim(text);
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw BadNumber{std::string(field)};
    return v;
}

Rejection reject(const RawRecord& raw, RejectReason reason, std::string detail) {
    auto it = raw.fields.find("ticker");
    return {raw.id, it == raw.fields.end() ? std::string{} : std::string(trim(it->second)), reason,
            std::move(detail)};
}

std::string_view detail_for(RejectReason reason) {
    switch (reason) {
    case RejectReason::NonPositivePrice: return "price must be > 0";
    case RejectReason::NegativeCap: return "market_cap_usd must be >= 0";
    case RejectReason::BadYearOrder: return "eps_history years must be strictly increasing";
    case RejectReason::NonFiniteNumber: return "value out of domain";
    case RejectReason::BadCurrencyCode: return "currency mismatch";
    case RejectReason::MissingField: return "ticker is empty";
    case RejectReason::DuplicateTicker: return "ticker already loaded";
    }
    return "";
}

}  // namespace

ValidationResult validate_record(const RawRecord& raw) {
    if (!raw.malformed.empty()) return reject(raw, RejectReason::MissingField, raw.malformed);
    for (auto name : kRequiredFields) {
        if (raw.fields.find(std::string(name)) == raw.fields.end())
            return reject(raw, RejectReason::MissingField, std::string(name));
    }
    const auto& f = raw.fields;
    auto get = [&](const char* key) -> std::string_view { return f.at(key); };
    auto opt = [&](const char* key) -> std::optional<std::string_view> {
        auto it = f.find(key);
        if (it == f.end() || trim(it->second).empty()) return std::nullopt;
        return std::string_view(it->second);
    };

    StockSnapshot s;
    s.ticker = std::string(trim(get("ticker")));
    s.name = std::string(get("name"));
    s.sector = std::string(get("sector"));
    s.industry = std::string(get("industry"));

    auto currency = Currency::parse(trim(get("currency")));
    if (!currency) return reject(raw, RejectReason::BadCurrencyCode, std::string(get("currency")));
    s.currency = *currency;

    try {
        s.price = {parse_real("price", get("price")), s.currency};
        s.market_cap_usd = parse_real("market_cap_usd", get("market_cap_usd"));
        s.analyst_count = parse_int("analyst_count", get("analyst_count"));
        s.growth_5y_est = Percent{parse_real("growth_5y_est_pct", get("growth_5y_est_pct"))};
        s.past_growth_5y = Percent{parse_real("past_growth_5y_pct", get("past_growth_5y_pct"))};
        s.current_ratio = parse_real("current_ratio", get("current_ratio"));
        if (auto v = opt("eps_fy0_est")) s.eps_fy0_est = MoneyPerShare{parse_real("eps_fy0_est", *v), s.currency};
        if (auto v = opt("eps_fy1_est")) s.eps_fy1_est = MoneyPerShare{parse_real("eps_fy1_est", *v), s.currency};
        for (const auto& cell : raw.eps_history) {
            if (trim(cell.year).empty() || trim(cell.eps).empty())
                return reject(raw, RejectReason::MissingField, "eps_history entry");
            s.eps_history.push_back({parse_int("eps_history.year", cell.year),
                                     {parse_real("eps_history.eps", cell.eps), s.currency}});
        }
    } catch (const BadNumber& bad) {
        return reject(raw, RejectReason::NonFiniteNumber, bad.field);
    }

    if (auto bad = check_snapshot(s)) return reject(raw, *bad, std::string(detail_for(*bad)));
    return s;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        // Lines with nothing on them are not records.
        if (!(row.size() == 1 && row.front().empty())) rows.push_back(std::move(row));
        row.clear();
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
        case '"':
            if (!field_started || field.empty()) in_quotes = true;
            else field += c;
            field_started = true;
            break;
        case ',': end_field(); break;
        case '\r':
            if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
            end_row();
            break;
        case '\n': end_row(); break;
        default:
            field += c;
            field_started = true;
        }
    }
    if (field_started || !field.empty() || !row.empty()) end_row();
    return rows;
}

namespace {

void ingest_records(const std::vector<RawRecord>& records, LoadResult& result) {
    for (const auto& raw : records) {
        auto validated = validate_record(raw);
        if (auto* rej = std::get_if<Rejection>(&validated)) {
            result.report.rejected.push_back(std::move(*rej));
            continue;
        }
        auto& snapshot = std::get<StockSnapshot>(validated);
        std::string ticker = snapshot.ticker;
        if (auto bad = result.universe.insert(std::move(snapshot))) {
            result.report.rejected.push_back(
                {raw.id, ticker, *bad, std::string(detail_for(*bad))});
            continue;
        }
        ++result.report.accepted;
    }
}

Date require_date(std::string_view text) {
    auto d = parse_iso_date(trim(text));
    if (!d) throw Error(ErrorKind::Schema, "as_of is not a YYYY-MM-DD date: '" + std::string(text) + "'");
    return *d;
}

LoadResult load_csv(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::optional<Date> as_of;
    while (!text.empty() && text.front() == '#') {
        const auto eol = text.find('\n');
        std::string_view line = trim(text.substr(1, eol == std::string_view::npos ? text.npos : eol - 1));
        if (line.substr(0, 6) == "as_of:") as_of = require_date(line.substr(6));
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    }
    if (!as_of) throw Error(ErrorKind::Schema, "CSV snapshot lacks a '# as_of: YYYY-MM-DD' line");

    const auto rows = parse_csv(text);
    if (rows.empty()) throw Error(ErrorKind::Schema, "CSV snapshot has no header");

    std::vector<std::string> header;
    for (const auto& h : rows.front()) header.emplace_back(trim(h));
    std::set<std::string> seen;
    for (const auto& h : header) {
        if (!seen.insert(h).second) throw Error(ErrorKind::Schema, "duplicate CSV column '" + h + "'");
    }
    for (auto name : kRequiredFields) {
        if (!seen.count(std::string(name)))
            throw Error(ErrorKind::Schema, "CSV header lacks column '" + std::string(name) + "'");
    }
    // eps_y1..eps_yN must be contiguous from 1.
    std::size_t eps_columns = 0;
    while (seen.count("eps_y" + std::to_string(eps_columns + 1))) ++eps_columns;
    for (const auto& h : header) {
        if (h.rfind("eps_y", 0) == 0 && h != "eps_year1") {
            int n = 0;
            auto [ptr, ec] = std::from_chars(h.data() + 5, h.data() + h.size(), n);
            if (ec != std::errc{} || ptr != h.data() + h.size() || n < 1 ||
                static_cast<std::size_t>(n) > eps_columns)
                throw Error(ErrorKind::Schema, "unexpected EPS column '" + h + "'");
        }
    }
    if (eps_columns > 0 && !seen.count("eps_year1"))
        throw Error(ErrorKind::Schema, "CSV header has eps_y columns but no eps_year1");

    std::vector<RawRecord> records;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        RawRecord raw;
        raw.id = r;
        const auto& row = rows[r];
        if (row.size() != header.size()) {
            raw.fields.emplace("ticker", row.empty() ? std::string{} : row.front());
            raw.malformed = "expected " + std::to_string(header.size()) + " fields, got " +
                            std::to_string(row.size());
            records.push_back(std::move(raw));
            continue;
        }
        std::string year1;
        std::vector<std::string> eps(eps_columns);
        for (std::size_t c = 0; c < header.size(); ++c) {
            const auto& h = header[c];
            if (h == "eps_year1") {
                year1 = row[c];
            } else if (h.rfind("eps_y", 0) == 0) {
                eps[static_cast<std::size_t>(std::stoi(h.substr(5))) - 1] = row[c];
            } else if (h == "eps_fy0_est" || h == "eps_fy1_est") {
                if (!trim(row[c]).empty()) raw.fields.emplace(h, row[c]);
            } else {
                raw.fields.emplace(h, row[c]);
            }
        }
        bool any_eps = std::any_of(eps.begin(), eps.end(),
                                   [](const std::string& e) { return !trim(e).empty(); });
        if (any_eps) {
            int base = 0;
            const auto y = trim(year1);
            auto [ptr, ec] = std::from_chars(y.data(), y.data() + y.size(), base);
            const bool numeric = !y.empty() && ec == std::errc{} && ptr == y.data() + y.size();
            for (std::size_t i = 0; i < eps.size(); ++i) {
                if (trim(eps[i]).empty()) continue;
                // An unusable anchor is passed through so validation names it.
                std::string year = numeric ? std::to_string(base + static_cast<int>(i)) : std::string(y);
                raw.eps_history.push_back({std::move(year), eps[i]});
            }
        }
        records.push_back(std::move(raw));
    }

    LoadResult result;
    result.universe = Universe(*as_of);
    result.report.as_of = *as_of;
    ingest_records(records, result);
    return result;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    // Objects, arrays and booleans are not numbers or text.
    return "\x01";
}

LoadResult load_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::Schema, "JSON snapshot must be an object");
    if (!doc.contains("as_of") || !doc["as_of"].is_string())
        throw Error(ErrorKind::Schema, "JSON snapshot lacks a string 'as_of'");
    const Date as_of = require_date(doc["as_of"].get<std::string>());
    if (!doc.contains("stocks") || !doc["stocks"].is_array())
        throw Error(ErrorKind::Schema, "JSON snapshot lacks a 'stocks' array");

    std::vector<RawRecord> records;
    std::size_t id = 0;
    for (const auto& item : doc["stocks"]) {
        RawRecord raw;
        raw.id = ++id;
        if (item.is_object()) {
            for (const auto& [key, value] : item.items()) {
                if (key == "eps_history") continue;
                if (value.is_null()) continue;
                raw.fields.emplace(key, scalar_text(value));
            }
            if (item.contains("eps_history")) {
                const auto& hist = item["eps_history"];
                if (hist.is_array()) {
                    for (const auto& p : hist) {
                        RawRecord::EpsCell cell{"", ""};
                        if (p.is_object()) {
                            if (p.contains("year")) cell.year = scalar_text(p["year"]);
                            if (p.contains("eps")) cell.eps = scalar_text(p["eps"]);
                        }
                        raw.eps_history.push_back(std::move(cell));
                    }
                } else if (!hist.is_null()) {
                    raw.malformed = "eps_history is not an array";
                }
            }
        } else {
            raw.malformed = "record is not an object";
        }
        records.push_back(std::move(raw));
    }

    LoadResult result;
    result.universe = Universe(as_of);
    result.report.as_of = as_of;
    ingest_records(records, result);
    return result;
}

}  // namespace

LoadResult load_universe_from_string(std::string_view text, SnapshotFormat format) {
    return format == SnapshotFormat::Csv ? load_csv(text) : load_json(text);
}

LoadResult load_universe(std::istream& in, SnapshotFormat format) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw Error(ErrorKind::Io, "read failure");
    return load_universe_from_string(text, format);
}

LoadResult load_universe(const std::filesystem::path& path, std::optional<SnapshotFormat> format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw Error(ErrorKind::Io, "read failure on '" + path.string() + "'");

    if (!format) {
        auto ext = path.extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (ext == ".csv") format = SnapshotFormat::Csv;
        else if (ext == ".json") format = SnapshotFormat::Json;
        else {
            auto body = trim(text);
            format = (!body.empty() && body.front() == '{') ? SnapshotFormat::Json
                                                            : SnapshotFormat::Csv;
        }
    }
    return load_universe_from_string(text, *format);
}

std::string universe_to_json(const Universe& universe, int indent) {
    ordered_json doc;
    doc["as_of"] = format_iso_date(universe.as_of());
    ordered_json stocks = ordered_json::array();
    for (const auto& s : universe.snapshots()) {
        ordered_json j;
        j["ticker"] = s.ticker;
        j["name"] = s.name;
        j["sector"] = s.sector;
        j["industry"] = s.industry;
        j["currency"] = s.currency.str();
        j["price"] = s.price.value;
        j["market_cap_usd"] = s.market_cap_usd;
        j["analyst_count"] = s.analyst_count;
        j["growth_5y_est_pct"] = s.growth_5y_est.value;
        j["past_growth_5y_pct"] = s.past_growth_5y.value;
        j["current_ratio"] = s.current_ratio;
        ordered_json hist = ordered_json::array();
        for (const auto& p : s.eps_history)
            hist.push_back({{"year", p.fiscal_year}, {"eps", p.eps.value}});
        j["eps_history"] = std::move(hist);
        j["eps_fy0_est"] = s.eps_fy0_est ? ordered_json(s.eps_fy0_est->value) : ordered_json();
        j["eps_fy1_est"] = s.eps_fy1_est ? ordered_json(s.eps_fy1_est->value) : ordered_json();
        stocks.push_back(std::move(j));
    }
    doc["stocks"] = std::move(stocks);
    return doc.dump(indent) + "\n";
}

}  // namespace graham
