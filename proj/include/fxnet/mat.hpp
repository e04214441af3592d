#pragma once

#include <cstddef>
#include <vector>

namespace fxnet {

/// Dense row-major matrix of doubles. Sized for the small covariance blocks
/// and N x N similarity tables this project works with.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool operator==(const Mat&) const = default;
};

}  // namespace fxnet
