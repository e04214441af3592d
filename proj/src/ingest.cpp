#include "fxnet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace fxnet {

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

Date Date::parse(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        throw ParseError("malformed row: bad date '" + text + "'");
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i == 4 || i == 7) continue;
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("malformed row: bad date '" + text + "'");
    }
    Date d;
    d.year = std::stoi(text.substr(0, 4));
    d.month = std::stoi(text.substr(5, 2));
    d.day = std::stoi(text.substr(8, 2));
    const std::chrono::year_month_day ymd{std::chrono::year{d.year},
                                          std::chrono::month{unsigned(d.month)},
                                          std::chrono::day{unsigned(d.day)}};
    if (!ymd.ok())
        throw ParseError("malformed row: invalid calendar date '" + text + "'");
    return d;
}

namespace {

double parse_price(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw ParseError("malformed row: non-numeric price '" + field + "' at line " +
                         std::to_string(line_no));
    if (value <= 0.0)
        throw ParseError("non-positive price " + field + " at line " + std::to_string(line_no));
    return value;
}

bool valid_code(const std::string& code) {
    if (code.size() < 3 || code.size() > 8) return false;
    if (!std::isupper(static_cast<unsigned char>(code[0]))) return false;
    return std::all_of(code.begin(), code.end(), [](unsigned char c) {
        return std::isupper(c) || std::isdigit(c);
    });
}

std::vector<std::string> split_csv_line(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

std::vector<PriceRecord> parse_price_records(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("empty input");
    {
        auto header = split_csv_line(line);
        if (header != std::vector<std::string>{"date", "code", "bid", "ask"})
            throw ParseError("bad header, expected 'date,code,bid,ask'");
    }

    std::vector<PriceRecord> records;
    std::set<std::pair<Date, std::string>> seen;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 4)
            throw ParseError("malformed row: expected 4 fields at line " +
                             std::to_string(line_no));
        PriceRecord rec;
        rec.date = Date::parse(fields[0]);
        rec.asset_code = fields[1];
        if (!valid_code(rec.asset_code))
            throw ParseError("malformed row: bad asset code '" + rec.asset_code +
                             "' at line " + std::to_string(line_no));
        rec.bid = parse_price(fields[2], line_no);
        rec.ask = parse_price(fields[3], line_no);
        if (!seen.emplace(rec.date, rec.asset_code).second)
            throw ParseError("duplicate key (" + rec.date.iso() + ", " + rec.asset_code +
                             ") at line " + std::to_string(line_no));
        records.push_back(std::move(rec));
    }
    return records;
}

PricePanel align_panel(const std::vector<PriceRecord>& records, MissingPolicy policy) {
    // Per-asset date -> (bid, ask), assets sorted by the map ordering.
    std::map<std::string, std::map<Date, std::pair<double, double>>> by_asset;
    for (const auto& rec : records) {
        auto& series = by_asset[rec.asset_code];
        if (!series.emplace(rec.date, std::make_pair(rec.bid, rec.ask)).second)
            throw ParseError("duplicate key (" + rec.date.iso() + ", " + rec.asset_code + ")");
    }
    if (by_asset.size() < 2)
        throw ValidationError("insufficient overlap: need at least 2 assets");

    std::vector<Date> grid;
    if (policy == MissingPolicy::DropDate) {
        // Intersection of all asset date sets.
        std::map<Date, std::size_t> counts;
        for (const auto& [code, series] : by_asset)
            for (const auto& [date, px] : series) counts[date]++;
        for (const auto& [date, n] : counts)
            if (n == by_asset.size()) grid.push_back(date);
    } else {
        // Union of dates, trimmed to start at the first date on which every
        // asset already has a value to carry forward.
        std::set<Date> all;
        Date seed_ready{};
        for (const auto& [code, series] : by_asset) {
            for (const auto& [date, px] : series) all.insert(date);
            seed_ready = std::max(seed_ready, series.begin()->first);
        }
        for (const auto& date : all)
            if (!(date < seed_ready)) grid.push_back(date);
        if (grid.empty())
            throw ValidationError("leading gap: no date on which every asset is seeded");
    }
    if (grid.size() < 3)
        throw ValidationError("insufficient overlap: " + std::to_string(grid.size()) +
                              " aligned dates, need at least 3");

    PricePanel panel;
    panel.dates = grid;
    for (const auto& [code, series] : by_asset) panel.assets.push_back(code);
    panel.values.resize(panel.assets.size() * grid.size() * 2);

    std::size_t ai = 0;
    for (const auto& [code, series] : by_asset) {
        std::pair<double, double> last{0.0, 0.0};
        bool seeded = false;
        // Seed with the newest value strictly before the grid start.
        for (const auto& [date, px] : series) {
            if (date < grid.front()) {
                last = px;
                seeded = true;
            }
        }
        for (std::size_t t = 0; t < grid.size(); ++t) {
            auto it = series.find(grid[t]);
            if (it != series.end()) {
                last = it->second;
                seeded = true;
            } else if (policy == MissingPolicy::DropDate || !seeded) {
                throw ValidationError("leading gap: asset " + code + " has no value on " +
                                      grid[t].iso());
            }
            panel.values[(ai * grid.size() + t) * 2] = last.first;
            panel.values[(ai * grid.size() + t) * 2 + 1] = last.second;
        }
        ++ai;
    }
    return panel;
}

const PricePanel& validate_panel(const PricePanel& panel) {
    const std::size_t n = panel.asset_count();
    const std::size_t t_count = panel.date_count();
    if (t_count < 3)
        throw ValidationError("panel invariant violation: T = " + std::to_string(t_count) +
                              " < 3");
    if (n < 2)
        throw ValidationError("panel invariant violation: fewer than 2 assets");
    if (panel.values.size() != n * t_count * 2)
        throw ValidationError("panel invariant violation: value array shape mismatch");
    for (std::size_t t = 1; t < t_count; ++t)
        if (!(panel.dates[t - 1] < panel.dates[t]))
            throw ValidationError("panel invariant violation: dates not strictly increasing");
    for (std::size_t i = 1; i < n; ++i)
        if (!(panel.assets[i - 1] < panel.assets[i]))
            throw ValidationError("panel invariant violation: assets not sorted unique");
    for (double v : panel.values)
        if (!(v > 0.0) || !std::isfinite(v))
            throw ValidationError("panel invariant violation: non-positive price");
    for (std::size_t i = 0; i < n; ++i) {
        bool bid_const = true, ask_const = true;
        for (std::size_t t = 1; t < t_count && (bid_const || ask_const); ++t) {
            if (panel.bid(i, t) != panel.bid(i, 0)) bid_const = false;
            if (panel.ask(i, t) != panel.ask(i, 0)) ask_const = false;
        }
        if (bid_const || ask_const)
            throw ValidationError("constant series: asset " + panel.assets[i]);
    }
    return panel;
}

std::string panel_to_csv(const PricePanel& panel) {
    std::ostringstream out;
    out << "date,code,bid,ask\n";
    char buf[32];
    for (std::size_t i = 0; i < panel.asset_count(); ++i) {
        for (std::size_t t = 0; t < panel.date_count(); ++t) {
            out << panel.dates[t].iso() << ',' << panel.assets[i] << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", panel.bid(i, t));
            out << buf << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", panel.ask(i, t));
            out << buf << '\n';
        }
    }
    return out.str();
}

}  // namespace fxnet
