#include "fxnet/serial_ref.hpp"

#include <queue>

#include "fxnet/error.hpp"

namespace fxnet::serial {

SimilarityMatrix build_similarity_matrix(const std::vector<ReturnMatrix>& returns) {
    const std::size_t n = returns.size();
    if (n < 2) throw ValidationError("need at least 2 return matrices");
    SimilarityMatrix sim;
    for (const auto& rm : returns) sim.assets.push_back(rm.asset_code);
    sim.rv = Mat(n, n);
    sim.dist = Mat(n, n);
    for (std::size_t i = 0; i < n; ++i) sim.rv(i, i) = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double rv = rv_coefficient(returns[i].data, returns[j].data);
            sim.rv(i, j) = rv;
            sim.rv(j, i) = rv;
            sim.dist(i, j) = rv_distance(rv);
            sim.dist(j, i) = sim.dist(i, j);
        }
    }
    return sim;
}

namespace {

std::vector<int> bfs_distances(const SpanningTree& tree, int source) {
    std::vector<int> dist(std::size_t(tree.node_count), -1);
    std::queue<int> q;
    dist[std::size_t(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : tree.adjacency[std::size_t(u)])
            if (dist[std::size_t(v)] < 0) {
                dist[std::size_t(v)] = dist[std::size_t(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

}  // namespace

CentralityScores betweenness_centrality(const SpanningTree& tree) {
    const int n = tree.node_count;
    CentralityScores scores{Measure::Betweenness, std::vector<double>(std::size_t(n), 0.0)};
    if (n == 2) return scores;
    const double normalizer = double(n - 1) * double(n - 2) / 2.0;
    // Pair enumeration: for each {j, k} walk the unique path and credit
    // every interior node.
    std::vector<std::vector<int>> dist;
    dist.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) dist.push_back(bfs_distances(tree, i));
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                if (i == j || i == k) continue;
                if (dist[std::size_t(j)][std::size_t(i)] + dist[std::size_t(i)][std::size_t(k)] ==
                    dist[std::size_t(j)][std::size_t(k)])
                    scores.values[std::size_t(i)] += 1.0;
            }
        }
    }
    for (double& v : scores.values) v /= normalizer;
    return scores;
}

CentralityScores closeness_centrality(const SpanningTree& tree) {
    const int n = tree.node_count;
    CentralityScores scores{Measure::Closeness, std::vector<double>(std::size_t(n))};
    for (int i = 0; i < n; ++i) {
        const auto dist = bfs_distances(tree, i);
        long total = 0;
        for (int d : dist) total += d;
        scores.values[std::size_t(i)] = double(n - 1) / double(total);
    }
    return scores;
}

}  // namespace fxnet::serial
