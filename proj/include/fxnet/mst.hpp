#pragma once

#include <cstddef>
#include <vector>

#include "fxnet/rvcorr.hpp"

namespace fxnet {

/// Undirected tree edge in canonical orientation (a < b).
struct Edge {
    int a = 0;
    int b = 0;
    double distance = 0.0;
    double rv = 0.0;

    bool operator==(const Edge&) const = default;
};

struct SpanningTree {
    int node_count = 0;
    std::vector<Edge> edges;                  // exactly node_count - 1
    std::vector<std::vector<int>> adjacency;  // per-node neighbor lists

    /// Builds adjacency and checks the tree is connected and acyclic.
    static SpanningTree from_edges(int node_count, std::vector<Edge> edges);
};

/// Union-find with path compression and union by rank.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n);
    int find(int v);
    bool unite(int a, int b);  // false if already in one component

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

/// Kruskal MST over the complete distance graph. Edges are considered in
/// ascending (distance, a, b) order, which makes ties deterministic.
SpanningTree kruskal_mst(const SimilarityMatrix& sim);

/// Test oracle: enumerates all N^(N-2) labeled trees via Prufer sequences
/// and returns one of minimum total distance. N <= 8 only.
SpanningTree brute_force_mst(const SimilarityMatrix& sim);

int tree_degree(const SpanningTree& tree, int node);

double total_weight(const SpanningTree& tree);

}  // namespace fxnet
