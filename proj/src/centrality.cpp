#include "fxnet/centrality.hpp"

#include <cmath>
#include <queue>

#include "fxnet/error.hpp"

namespace fxnet {

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::Degree: return "degree";
        case Measure::Closeness: return "closeness";
        case Measure::Betweenness: return "betweenness";
        case Measure::Eigenvector: return "eigenvector";
    }
    return "?";
}

namespace {

// Hop distances from `source` to every node, BFS over the tree.
std::vector<int> bfs_distances(const SpanningTree& tree, int source) {
    std::vector<int> dist(std::size_t(tree.node_count), -1);
    std::queue<int> q;
    dist[std::size_t(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : tree.adjacency[std::size_t(u)]) {
            if (dist[std::size_t(v)] < 0) {
                dist[std::size_t(v)] = dist[std::size_t(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

// Sizes of the components that remain when `node` is removed, one per
// neighbor subtree.
std::vector<long> component_sizes(const SpanningTree& tree, int node) {
    std::vector<long> sizes;
    std::vector<char> seen(std::size_t(tree.node_count), 0);
    seen[std::size_t(node)] = 1;
    for (int nbr : tree.adjacency[std::size_t(node)]) {
        long count = 0;
        std::queue<int> q;
        seen[std::size_t(nbr)] = 1;
        q.push(nbr);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            ++count;
            for (int v : tree.adjacency[std::size_t(u)])
                if (!seen[std::size_t(v)]) {
                    seen[std::size_t(v)] = 1;
                    q.push(v);
                }
        }
        sizes.push_back(count);
    }
    return sizes;
}

}  // namespace

CentralityScores degree_centrality(const SpanningTree& tree) {
    const int n = tree.node_count;
    CentralityScores scores{Measure::Degree, std::vector<double>(std::size_t(n))};
    for (int i = 0; i < n; ++i)
        scores.values[std::size_t(i)] = double(tree_degree(tree, i)) / double(n - 1);
    return scores;
}

CentralityScores betweenness_centrality(const SpanningTree& tree) {
    const int n = tree.node_count;
    CentralityScores scores{Measure::Betweenness, std::vector<double>(std::size_t(n), 0.0)};
    if (n == 2) return scores;

    // In a tree every pair has a unique shortest path; the pairs routed
    // through i are exactly those split across distinct components of
    // tree minus i: ((N-1)^2 - sum c_t^2) / 2.
    const double normalizer = double(n - 1) * double(n - 2) / 2.0;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        const auto sizes = component_sizes(tree, i);
        long rest = long(n) - 1;
        long sum_sq = 0;
        for (long c : sizes) sum_sq += c * c;
        const double through = double(rest * rest - sum_sq) / 2.0;
        scores.values[std::size_t(i)] = through / normalizer;
    }
    return scores;
}

CentralityScores closeness_centrality(const SpanningTree& tree) {
    const int n = tree.node_count;
    CentralityScores scores{Measure::Closeness, std::vector<double>(std::size_t(n))};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        const auto dist = bfs_distances(tree, i);
        long total = 0;
        for (int d : dist) total += d;
        scores.values[std::size_t(i)] = double(n - 1) / double(total);
    }
    return scores;
}

std::pair<CentralityScores, EigenSolveReport> eigenvector_centrality(const SpanningTree& tree,
                                                                     double tol, int max_iter) {
    const int n = tree.node_count;
    std::vector<double> x(std::size_t(n), 1.0 / std::sqrt(double(n)));
    std::vector<double> ax(std::size_t(n), 0.0);

    auto apply_adjacency = [&](const std::vector<double>& in, std::vector<double>& out) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j : tree.adjacency[std::size_t(i)]) acc += in[std::size_t(j)];
            out[std::size_t(i)] = acc;
        }
    };

    int iterations = 0;
    bool converged = false;
    std::vector<double> next(std::size_t(n), 0.0);
    while (iterations < max_iter) {
        ++iterations;
        apply_adjacency(x, ax);
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            next[std::size_t(i)] = x[std::size_t(i)] + ax[std::size_t(i)];  // (A + I) x
            norm += next[std::size_t(i)] * next[std::size_t(i)];
        }
        norm = std::sqrt(norm);
        double diff = 0.0;
        for (int i = 0; i < n; ++i) {
            next[std::size_t(i)] /= norm;
            const double d = next[std::size_t(i)] - x[std::size_t(i)];
            diff += d * d;
        }
        x.swap(next);
        if (std::sqrt(diff) < tol) {
            converged = true;
            break;
        }
    }

    // Rayleigh quotient of A, then the final residual check.
    apply_adjacency(x, ax);
    double lambda = 0.0;
    for (int i = 0; i < n; ++i) lambda += x[std::size_t(i)] * ax[std::size_t(i)];
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = ax[std::size_t(i)] - lambda * x[std::size_t(i)];
        residual += r * r;
    }
    residual = std::sqrt(residual);

    if (!converged || residual >= tol * double(n))
        throw NumericError("eigenvector centrality did not converge after " +
                           std::to_string(iterations) +
                           " iterations, residual " + std::to_string(residual));

    // Perron sign convention: the start vector is positive and A + I is
    // non-negative, so entries stay non-negative; snap any -0 values.
    for (double& v : x)
        if (v < 0.0) v = 0.0;

    CentralityScores scores{Measure::Eigenvector, std::move(x)};
    return {std::move(scores), EigenSolveReport{lambda, iterations, residual}};
}

int hop_distance(const SpanningTree& tree, int i, int j) {
    if (i < 0 || j < 0 || i >= tree.node_count || j >= tree.node_count)
        throw ValidationError("node index out of range");
    return bfs_distances(tree, i)[std::size_t(j)];
}

std::array<CentralityScores, 4> all_centralities(const SpanningTree& tree, double eig_tol,
                                                 int eig_max_iter, EigenSolveReport* report) {
    auto [eig, eig_report] = eigenvector_centrality(tree, eig_tol, eig_max_iter);
    if (report) *report = eig_report;
    return {degree_centrality(tree), closeness_centrality(tree), betweenness_centrality(tree),
            std::move(eig)};
}

}  // namespace fxnet
