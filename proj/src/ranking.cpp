#include "fxnet/ranking.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fxnet/error.hpp"

namespace fxnet {

namespace {

void check_node_set(const CentralityScores& scores, const std::vector<std::string>& codes) {
    if (scores.values.size() != codes.size())
        throw ValidationError("measure mismatch: score table and code list differ in size");
}

// Node indices sorted by descending score, code tie-break.
std::vector<std::size_t> order_desc(const CentralityScores& scores,
                                    const std::vector<std::string>& codes) {
    std::vector<std::size_t> idx(codes.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (scores.values[a] != scores.values[b]) return scores.values[a] > scores.values[b];
        return codes[a] < codes[b];
    });
    return idx;
}

}  // namespace

std::vector<RankedEntry> rank_by_measure(const CentralityScores& scores,
                                         const std::vector<std::string>& codes, int k) {
    check_node_set(scores, codes);
    if (k < 1 || std::size_t(k) > codes.size())
        throw ValidationError("bad k: " + std::to_string(k));
    const auto idx = order_desc(scores, codes);
    std::vector<RankedEntry> out;
    out.reserve(std::size_t(k));
    for (int level = 1; level <= k; ++level)
        out.push_back({codes[idx[std::size_t(level - 1)]], scores.measure, level});
    return out;
}

ImportanceTable importance_table(const std::array<CentralityScores, 4>& all_scores,
                                 const std::vector<std::string>& codes, int k) {
    for (const auto& scores : all_scores) check_node_set(scores, codes);

    std::map<std::string, ImportanceRow> by_code;
    for (Measure m : kMeasureOrder) {
        const auto it = std::find_if(all_scores.begin(), all_scores.end(),
                                     [m](const auto& s) { return s.measure == m; });
        if (it == all_scores.end())
            throw ValidationError("measure mismatch: missing " + measure_name(m));
        for (const auto& entry : rank_by_measure(*it, codes, k)) {
            auto& row = by_code[entry.asset_code];
            row.asset_code = entry.asset_code;
            row.frequency++;
            row.levels.emplace_back(m, entry.level);
        }
    }

    ImportanceTable table;
    table.top_k = k;
    for (auto& [code, row] : by_code) table.rows.push_back(std::move(row));
    std::sort(table.rows.begin(), table.rows.end(),
              [](const ImportanceRow& a, const ImportanceRow& b) {
                  if (a.frequency != b.frequency) return a.frequency > b.frequency;
                  auto best = [](const ImportanceRow& r) {
                      int m = r.levels.front().second;
                      for (const auto& [measure, level] : r.levels) m = std::min(m, level);
                      return m;
                  };
                  const int ba = best(a), bb = best(b);
                  if (ba != bb) return ba < bb;
                  return a.asset_code < b.asset_code;
              });
    return table;
}

std::vector<std::string> least_central(const std::array<CentralityScores, 4>& all_scores,
                                       const std::vector<std::string>& codes, int m) {
    for (const auto& scores : all_scores) check_node_set(scores, codes);
    if (m < 1 || std::size_t(m) > codes.size())
        throw ValidationError("bad m: " + std::to_string(m));

    // Rank position 1 = lowest score within each measure; the smallest
    // rank sum marks the least central asset overall.
    const std::size_t n = codes.size();
    std::vector<long> rank_sum(n, 0);
    for (const auto& scores : all_scores) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (scores.values[a] != scores.values[b]) return scores.values[a] < scores.values[b];
            return codes[a] < codes[b];
        });
        for (std::size_t pos = 0; pos < n; ++pos) rank_sum[idx[pos]] += long(pos) + 1;
    }

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (rank_sum[a] != rank_sum[b]) return rank_sum[a] < rank_sum[b];
        return codes[a] < codes[b];
    });
    std::vector<std::string> out;
    out.reserve(std::size_t(m));
    for (int i = 0; i < m; ++i) out.push_back(codes[idx[std::size_t(i)]]);
    return out;
}

}  // namespace fxnet
