#pragma once

#include <span>
#include <string>
#include <vector>

#include "fxnet/mat.hpp"
#include "fxnet/returns.hpp"

namespace fxnet {

/// Sample covariance blocks of two data matrices over the same rows.
/// s_yx is implied as the transpose of s_xy.
struct CrossCovariance {
    Mat s_xx;
    Mat s_yy;
    Mat s_xy;
};

/// N x N RV coefficients and the derived metric distances.
struct SimilarityMatrix {
    std::vector<std::string> assets;
    Mat rv;    // symmetric, unit diagonal
    Mat dist;  // dist(i,j) = sqrt(2 (1 - rv(i,j)))

    std::size_t size() const { return assets.size(); }
};

/// Column-mean-centered covariance blocks with divisor (m - 1).
CrossCovariance cross_covariance(const Mat& x, const Mat& y);

/// Escoufier RV coefficient: tr(S_XY S_YX) / sqrt(tr(S_XX^2) tr(S_YY^2)).
/// Values in (1, 1 + 1e-12] clamp to 1; larger excursions are an error.
double rv_coefficient(const Mat& x, const Mat& y);

/// RV on two scalar series, viewed as m x 1 matrices. Equals Pearson r^2.
double rv_univariate_check(std::span<const double> x, std::span<const double> y);

/// d = sqrt(2 (1 - rv)), monotone decreasing on [0, 1].
double rv_distance(double rv);

/// Pairwise RV and distance over all assets. Pairs are evaluated in
/// parallel; each cell has one writer, so the result is schedule-independent.
SimilarityMatrix build_similarity_matrix(const std::vector<ReturnMatrix>& returns);

}  // namespace fxnet
