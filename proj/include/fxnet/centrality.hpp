#pragma once

#include <array>
#include <string>
#include <vector>

#include "fxnet/mst.hpp"

namespace fxnet {

enum class Measure { Degree, Closeness, Betweenness, Eigenvector };

/// Fixed reporting order for the four measures.
inline constexpr std::array<Measure, 4> kMeasureOrder = {
    Measure::Degree, Measure::Closeness, Measure::Betweenness, Measure::Eigenvector};

std::string measure_name(Measure m);

struct CentralityScores {
    Measure measure = Measure::Degree;
    std::vector<double> values;
};

struct EigenSolveReport {
    double lambda_max = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

/// deg(i) / (N - 1)
CentralityScores degree_centrality(const SpanningTree& tree);

/// Fraction of unordered pairs {j,k} whose unique tree path passes through
/// i, over (N-1)(N-2)/2. All zeros for N = 2. Parallel over nodes.
CentralityScores betweenness_centrality(const SpanningTree& tree);

/// (N - 1) / sum of hop distances, BFS per source node (parallel).
CentralityScores closeness_centrality(const SpanningTree& tree);

/// Perron vector of the adjacency matrix via power iteration on A + I
/// (trees are bipartite; the shift breaks the +/- lambda_max symmetry).
/// Scores have unit Euclidean norm and non-negative entries.
std::pair<CentralityScores, EigenSolveReport> eigenvector_centrality(
    const SpanningTree& tree, double tol = 1e-10, int max_iter = 10000);

/// Number of edges on the unique i -> j tree path.
int hop_distance(const SpanningTree& tree, int i, int j);

/// All four measures in kMeasureOrder.
std::array<CentralityScores, 4> all_centralities(const SpanningTree& tree,
                                                 double eig_tol = 1e-10,
                                                 int eig_max_iter = 10000,
                                                 EigenSolveReport* report = nullptr);

}  // namespace fxnet
