#pragma once

#include "fxnet/centrality.hpp"
#include "fxnet/rvcorr.hpp"

// Serial reference implementations of the OpenMP kernels. Kept for tests
// (parallel output must match these exactly) and for the benchmark target.
namespace fxnet::serial {

SimilarityMatrix build_similarity_matrix(const std::vector<ReturnMatrix>& returns);

CentralityScores betweenness_centrality(const SpanningTree& tree);

CentralityScores closeness_centrality(const SpanningTree& tree);

}  // namespace fxnet::serial
