#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fxnet/centrality.hpp"
#include "fxnet/config.hpp"
#include "fxnet/ranking.hpp"

namespace fxnet {

/// Everything one pipeline run produces, ready for serialization.
struct ReportBundle {
    std::size_t asset_count = 0;
    std::size_t date_count = 0;
    std::string first_date;
    std::string last_date;
    SimilarityMatrix sim;
    SpanningTree tree;
    std::array<CentralityScores, 4> scores;  // kMeasureOrder
    ImportanceTable importance;
    std::vector<std::string> least;
    EigenSolveReport eigen_report;
    PipelineConfig config;
};

/// Undirected DOT graph: node attributes carry the four scores,
/// edge attributes carry rv and dist. Deterministic ordering.
std::string export_dot(const ReportBundle& bundle);

/// GraphML 1.0 with declared keys for the same attributes.
std::string export_graphml(const ReportBundle& bundle);

/// centrality.csv, importance.csv, least_central.csv keyed by filename.
std::map<std::string, std::string> export_tables(const ReportBundle& bundle);

/// Square matrix as CSV with asset codes in the header row and column,
/// 12 significant digits.
std::string export_matrix_csv(const std::vector<std::string>& codes, const Mat& matrix);

}  // namespace fxnet
