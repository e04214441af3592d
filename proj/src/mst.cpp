#include "fxnet/mst.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

#include "fxnet/error.hpp"

namespace fxnet {

SpanningTree SpanningTree::from_edges(int node_count, std::vector<Edge> edges) {
    if (node_count < 2)
        throw ValidationError("tree needs at least 2 nodes");
    if (edges.size() != std::size_t(node_count - 1))
        throw ValidationError("tree must have exactly N-1 edges");
    SpanningTree tree;
    tree.node_count = node_count;
    tree.edges = std::move(edges);
    tree.adjacency.assign(std::size_t(node_count), {});
    DisjointSet ds{std::size_t(node_count)};
    for (const auto& e : tree.edges) {
        if (e.a < 0 || e.b < 0 || e.a >= node_count || e.b >= node_count || e.a >= e.b)
            throw ValidationError("bad edge orientation");
        if (!ds.unite(e.a, e.b))
            throw ValidationError("edge list contains a cycle");
        tree.adjacency[std::size_t(e.a)].push_back(e.b);
        tree.adjacency[std::size_t(e.b)].push_back(e.a);
    }
    for (auto& nbrs : tree.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return tree;
}

DisjointSet::DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSet::find(int v) {
    while (parent_[std::size_t(v)] != v) {
        parent_[std::size_t(v)] = parent_[std::size_t(parent_[std::size_t(v)])];
        v = parent_[std::size_t(v)];
    }
    return v;
}

bool DisjointSet::unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rank_[std::size_t(ra)] < rank_[std::size_t(rb)]) std::swap(ra, rb);
    parent_[std::size_t(rb)] = ra;
    if (rank_[std::size_t(ra)] == rank_[std::size_t(rb)]) rank_[std::size_t(ra)]++;
    return true;
}

SpanningTree kruskal_mst(const SimilarityMatrix& sim) {
    const int n = int(sim.size());
    if (n < 2) throw ValidationError("need at least 2 nodes for an MST");

    std::vector<Edge> all;
    all.reserve(std::size_t(n) * std::size_t(n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            all.push_back({i, j, sim.dist(std::size_t(i), std::size_t(j)),
                           sim.rv(std::size_t(i), std::size_t(j))});
    std::sort(all.begin(), all.end(), [](const Edge& x, const Edge& y) {
        if (x.distance != y.distance) return x.distance < y.distance;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });

    DisjointSet ds{std::size_t(n)};
    std::vector<Edge> chosen;
    chosen.reserve(std::size_t(n - 1));
    for (const auto& e : all) {
        if (ds.unite(e.a, e.b)) {
            chosen.push_back(e);
            if (int(chosen.size()) == n - 1) break;
        }
    }
    return SpanningTree::from_edges(n, std::move(chosen));
}

namespace {

// Decodes a Prufer sequence into the edge list of the labeled tree.
std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(std::size_t(n), 1);
    for (int v : seq) degree[std::size_t(v)]++;
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[std::size_t(v)] == 1) leaves.push(v);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(std::size_t(n - 1));
    for (int v : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--degree[std::size_t(v)] == 1) leaves.push(v);
    }
    int u = leaves.top();
    leaves.pop();
    int w = leaves.top();
    edges.emplace_back(std::min(u, w), std::max(u, w));
    return edges;
}

}  // namespace

SpanningTree brute_force_mst(const SimilarityMatrix& sim) {
    const int n = int(sim.size());
    if (n < 2) throw ValidationError("need at least 2 nodes for an MST");
    if (n > 8) throw ValidationError("too large: brute force limited to N <= 8");

    if (n == 2) {
        std::vector<Edge> e{{0, 1, sim.dist(0, 1), sim.rv(0, 1)}};
        return SpanningTree::from_edges(2, std::move(e));
    }

    std::vector<int> seq(std::size_t(n - 2), 0);
    std::vector<std::pair<int, int>> best_edges;
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        auto edges = prufer_decode(seq, n);
        double w = 0.0;
        for (auto [a, b] : edges) w += sim.dist(std::size_t(a), std::size_t(b));
        if (w < best) {
            best = w;
            best_edges = edges;
        }
        // Odometer over base-n sequences.
        int pos = n - 3;
        while (pos >= 0 && seq[std::size_t(pos)] == n - 1) seq[std::size_t(pos--)] = 0;
        if (pos < 0) break;
        seq[std::size_t(pos)]++;
    }

    std::sort(best_edges.begin(), best_edges.end());
    std::vector<Edge> edges;
    for (auto [a, b] : best_edges)
        edges.push_back({a, b, sim.dist(std::size_t(a), std::size_t(b)),
                         sim.rv(std::size_t(a), std::size_t(b))});
    return SpanningTree::from_edges(n, std::move(edges));
}

int tree_degree(const SpanningTree& tree, int node) {
    if (node < 0 || node >= tree.node_count)
        throw ValidationError("node index out of range");
    return int(tree.adjacency[std::size_t(node)].size());
}

double total_weight(const SpanningTree& tree) {
    double w = 0.0;
    for (const auto& e : tree.edges) w += e.distance;
    return w;
}

}  // namespace fxnet
