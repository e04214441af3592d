#pragma once

#include <array>
#include <string>
#include <vector>

#include "fxnet/centrality.hpp"

namespace fxnet {

struct RankedEntry {
    std::string asset_code;
    Measure measure = Measure::Degree;
    int level = 0;  // 1 = highest score
};

struct ImportanceRow {
    std::string asset_code;
    int frequency = 0;  // measures (out of 4) whose top-k contain the asset
    // (measure, level) for each measure the asset appears in, kMeasureOrder.
    std::vector<std::pair<Measure, int>> levels;
};

struct ImportanceTable {
    int top_k = 0;
    std::vector<ImportanceRow> rows;
};

/// Top-k nodes by score, ties broken by lexicographic asset code,
/// levels 1..k in that order.
std::vector<RankedEntry> rank_by_measure(const CentralityScores& scores,
                                         const std::vector<std::string>& codes, int k);

/// Union of the four top-k lists with per-asset frequency and levels.
/// Rows sorted by frequency desc, then best level, then code.
ImportanceTable importance_table(const std::array<CentralityScores, 4>& all_scores,
                                 const std::vector<std::string>& codes, int k = 8);

/// The m least central assets by ascending-score rank-sum aggregation
/// across the four measures; least central first.
std::vector<std::string> least_central(const std::array<CentralityScores, 4>& all_scores,
                                       const std::vector<std::string>& codes, int m = 10);

}  // namespace fxnet
