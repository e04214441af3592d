#include "fxnet/rvcorr.hpp"

#include <cmath>
#include <stdexcept>

#include "fxnet/error.hpp"

namespace fxnet {

namespace {

Mat column_means(const Mat& x) {
    Mat mu(1, x.cols);
    for (std::size_t t = 0; t < x.rows; ++t)
        for (std::size_t c = 0; c < x.cols; ++c) mu(0, c) += x(t, c);
    for (std::size_t c = 0; c < x.cols; ++c) mu(0, c) /= double(x.rows);
    return mu;
}

Mat covariance_block(const Mat& x, const Mat& mx, const Mat& y, const Mat& my) {
    Mat s(x.cols, y.cols);
    for (std::size_t t = 0; t < x.rows; ++t)
        for (std::size_t a = 0; a < x.cols; ++a)
            for (std::size_t b = 0; b < y.cols; ++b)
                s(a, b) += (x(t, a) - mx(0, a)) * (y(t, b) - my(0, b));
    const double divisor = double(x.rows - 1);
    for (double& v : s.data) v /= divisor;
    return s;
}

// tr(S S^t) = squared Frobenius norm; equals tr(S^2) for symmetric S and
// tr(S_XY S_YX) for the cross block.
double frob_sq(const Mat& s) {
    double acc = 0.0;
    for (double v : s.data) acc += v * v;
    return acc;
}

}  // namespace

CrossCovariance cross_covariance(const Mat& x, const Mat& y) {
    if (x.rows != y.rows)
        throw ValidationError("row count mismatch: " + std::to_string(x.rows) + " vs " +
                              std::to_string(y.rows));
    if (x.rows < 2)
        throw ValidationError("too few rows: need at least 2 observations");
    const Mat mx = column_means(x);
    const Mat my = column_means(y);
    CrossCovariance cc;
    cc.s_xx = covariance_block(x, mx, x, mx);
    cc.s_yy = covariance_block(y, my, y, my);
    cc.s_xy = covariance_block(x, mx, y, my);
    return cc;
}

double rv_coefficient(const Mat& x, const Mat& y) {
    const CrossCovariance cc = cross_covariance(x, y);
    const double txx = frob_sq(cc.s_xx);
    const double tyy = frob_sq(cc.s_yy);
    if (txx == 0.0 || tyy == 0.0)
        throw NumericError("degenerate variance: zero covariance trace");
    const double rv = frob_sq(cc.s_xy) / std::sqrt(txx * tyy);
    if (rv > 1.0 + 1e-12)
        throw NumericError("RV out of bounds: " + std::to_string(rv));
    return std::min(rv, 1.0);
}

double rv_univariate_check(std::span<const double> x, std::span<const double> y) {
    Mat mx(x.size(), 1), my(y.size(), 1);
    for (std::size_t i = 0; i < x.size(); ++i) mx(i, 0) = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) my(i, 0) = y[i];
    return rv_coefficient(mx, my);
}

double rv_distance(double rv) {
    if (rv < 0.0 || rv > 1.0)
        throw NumericError("RV out of range for distance: " + std::to_string(rv));
    return std::sqrt(2.0 * (1.0 - rv));
}

SimilarityMatrix build_similarity_matrix(const std::vector<ReturnMatrix>& returns) {
    const std::size_t n = returns.size();
    if (n < 2) throw ValidationError("need at least 2 return matrices");
    for (std::size_t i = 1; i < n; ++i)
        if (returns[i].data.rows != returns[0].data.rows)
            throw ValidationError("row count mismatch across assets");

    // Degeneracy is checked up front, serially, so the offending asset can
    // be named; the parallel loop then cannot throw for that reason.
    for (const auto& rm : returns) {
        const CrossCovariance cc = cross_covariance(rm.data, rm.data);
        if (frob_sq(cc.s_xx) == 0.0)
            throw NumericError("degenerate variance: asset " + rm.asset_code);
    }

    SimilarityMatrix sim;
    sim.assets.reserve(n);
    for (const auto& rm : returns) sim.assets.push_back(rm.asset_code);
    sim.rv = Mat(n, n);
    sim.dist = Mat(n, n);
    for (std::size_t i = 0; i < n; ++i) sim.rv(i, i) = 1.0;

    // Flatten the strict upper triangle so the pairs spread evenly.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    bool failed = false;
    std::string failure;
#pragma omp parallel for schedule(dynamic, 16)
    for (long k = 0; k < long(pairs.size()); ++k) {
        const auto [i, j] = pairs[std::size_t(k)];
        try {
            const double rv = rv_coefficient(returns[i].data, returns[j].data);
            sim.rv(i, j) = rv;
            sim.rv(j, i) = rv;
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                failure = e.what();
            }
        }
    }
    if (failed) throw NumericError(failure);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) sim.dist(i, j) = rv_distance(sim.rv(i, j));
    return sim;
}

}  // namespace fxnet
