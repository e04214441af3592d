#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "fxnet/error.hpp"

namespace fxnet {

struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;

    std::string iso() const;

    /// Parses strict ISO-8601 `YYYY-MM-DD`, validating the calendar day.
    static Date parse(const std::string& text);
};

struct PriceRecord {
    Date date;
    std::string asset_code;
    double bid = 0.0;
    double ask = 0.0;
};

enum class MissingPolicy {
    DropDate,     // keep only dates on which every asset has a record
    ForwardFill,  // fill gaps with the asset's most recent prior value
};

/// Aligned panel of daily (bid, ask) prices: N assets x T dates.
/// Assets are sorted lexicographically; dates strictly increasing.
struct PricePanel {
    std::vector<Date> dates;           // length T
    std::vector<std::string> assets;   // length N, sorted, unique
    std::vector<double> values;        // N * T * 2, [asset][date][bid, ask]

    std::size_t asset_count() const { return assets.size(); }
    std::size_t date_count() const { return dates.size(); }

    double bid(std::size_t asset, std::size_t t) const {
        return values[(asset * dates.size() + t) * 2];
    }
    double ask(std::size_t asset, std::size_t t) const {
        return values[(asset * dates.size() + t) * 2 + 1];
    }

    bool operator==(const PricePanel&) const = default;
};

/// Parses long-format CSV with header `date,code,bid,ask`.
/// Rows are returned in file order; duplicate (date, code) pairs,
/// malformed fields, and non-positive prices are errors.
std::vector<PriceRecord> parse_price_records(std::istream& in);

/// Aligns raw records onto a common date grid under the given policy.
PricePanel align_panel(const std::vector<PriceRecord>& records, MissingPolicy policy);

/// Checks all panel invariants and rejects constant bid or ask series.
/// Returns its argument unchanged on success.
const PricePanel& validate_panel(const PricePanel& panel);

/// Serializes a panel back to the input CSV format (asset-major row order).
std::string panel_to_csv(const PricePanel& panel);

}  // namespace fxnet
