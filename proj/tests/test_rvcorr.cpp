#include <doctest.h>

#include <cmath>
#include <random>

#include "fxnet/error.hpp"
#include "fxnet/rvcorr.hpp"
#include "fxnet/serial_ref.hpp"
#include "oracles.hpp"

using namespace fxnet;

namespace {

Mat mat3x2(std::initializer_list<double> vals) {
    Mat m(3, 2);
    std::copy(vals.begin(), vals.end(), m.data.begin());
    return m;
}

std::vector<ReturnMatrix> random_returns(std::size_t n, std::size_t rows, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ReturnMatrix> out;
    for (std::size_t i = 0; i < n; ++i) {
        ReturnMatrix rm;
        rm.asset_code = std::string("A") + char('A' + i) + char('A' + i);
        rm.data = oracle::random_matrix(rows, 2, rng);
        out.push_back(std::move(rm));
    }
    return out;
}

}  // namespace

TEST_CASE("cross covariance on the 3-row example") {
    const Mat x = mat3x2({1, 0, 0, 1, -1, -1});
    const auto cc = cross_covariance(x, x);
    for (const Mat* block : {&cc.s_xx, &cc.s_yy, &cc.s_xy}) {
        CHECK((*block)(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK((*block)(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK((*block)(1, 0) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK((*block)(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("cross covariance against constant columns is zero") {
    std::mt19937_64 rng(3);
    const Mat x = oracle::random_matrix(8, 2, rng);
    const Mat y(8, 2, 0.0);
    const auto cc = cross_covariance(x, y);
    for (double v : cc.s_yy.data) CHECK(v == 0.0);
    for (double v : cc.s_xy.data) CHECK(v == 0.0);
}

TEST_CASE("swapping arguments transposes s_xy") {
    std::mt19937_64 rng(4);
    const Mat x = oracle::random_matrix(10, 2, rng);
    const Mat y = oracle::random_matrix(10, 2, rng);
    const auto xy = cross_covariance(x, y).s_xy;
    const auto yx = cross_covariance(y, x).s_xy;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) CHECK(xy(a, b) == yx(b, a));
}

TEST_CASE("cross covariance preconditions") {
    std::mt19937_64 rng(5);
    CHECK_THROWS_AS(cross_covariance(oracle::random_matrix(3, 2, rng),
                                     oracle::random_matrix(4, 2, rng)),
                    ValidationError);
    CHECK_THROWS_AS(cross_covariance(oracle::random_matrix(1, 2, rng),
                                     oracle::random_matrix(1, 2, rng)),
                    ValidationError);
}

TEST_CASE("RV of a matrix with itself is 1") {
    std::mt19937_64 rng(6);
    const Mat x = oracle::random_matrix(12, 2, rng);
    CHECK(rv_coefficient(x, x) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("RV = 1 for orthogonal-scaling-translation images") {
    std::mt19937_64 rng(7);
    const Mat x = oracle::random_matrix(20, 2, rng);
    const Mat b = oracle::random_orthogonal2(rng);
    const Mat y = oracle::affine_image(x, b, 2.0, {0.7, -1.3});
    CHECK(std::fabs(rv_coefficient(x, y) - 1.0) < 1e-9);
}

TEST_CASE("RV on a hand-worked 3x2 pair matches the direct oracle") {
    const Mat x = mat3x2({1, 0, 0, 1, -1, -1});
    const Mat y = mat3x2({1, 1, 1, -1, -2, 0});
    const double got = rv_coefficient(x, y);
    CHECK(std::fabs(got - oracle::rv(x, y)) < 1e-12);
    // This Y is an orthogonal-scaling image of X, so the value is exactly 1.
    CHECK(got == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("degenerate variance is rejected") {
    std::mt19937_64 rng(8);
    const Mat x = oracle::random_matrix(6, 2, rng);
    const Mat constant(6, 2, 3.5);
    CHECK_THROWS_AS(rv_coefficient(x, constant), NumericError);
    CHECK_THROWS_AS(rv_coefficient(constant, x), NumericError);
}

TEST_CASE("univariate reduction equals Pearson r^2") {
    CHECK(rv_univariate_check(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2, 3}) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rv_univariate_check(std::vector<double>{1, 2, 3}, std::vector<double>{-1, -2, -3}) ==
          doctest::Approx(1.0).epsilon(1e-14));
    const double got =
        rv_univariate_check(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2, 4});
    CHECK(std::fabs(got - 0.9642857142857145) < 1e-12);
    CHECK(std::fabs(got - oracle::pearson_r2({1, 2, 3}, {1, 2, 4})) < 1e-12);

    std::mt19937_64 rng(9);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> x(15), y(15);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = gauss(rng);
            y[i] = 0.4 * x[i] + gauss(rng);
        }
        CHECK(std::fabs(rv_univariate_check(x, y) - oracle::pearson_r2(x, y)) < 1e-12);
    }
}

TEST_CASE("diagnostic identity: RV = R^2 / sqrt(q) for p = 1, q = 2") {
    // For a univariate X against bivariate Y, the RV numerator reduces to
    // the regression sum of squares scaled by the Y norm; checked against
    // a direct least-squares fit.
    std::mt19937_64 rng(10);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t m = 60;
    Mat x(m, 1), y(m, 2);
    for (std::size_t t = 0; t < m; ++t) {
        y(t, 0) = gauss(rng);
        y(t, 1) = gauss(rng);
        x(t, 0) = 1.5 * y(t, 0) - 0.8 * y(t, 1) + 0.3 * gauss(rng);
    }
    // R^2 of regressing x on (y0, y1): via the normal equations on
    // centered data.
    auto center = [m](Mat& a) {
        for (std::size_t c = 0; c < a.cols; ++c) {
            double mean = 0.0;
            for (std::size_t t = 0; t < m; ++t) mean += a(t, c);
            mean /= double(m);
            for (std::size_t t = 0; t < m; ++t) a(t, c) -= mean;
        }
    };
    Mat xc = x, yc = y;
    center(xc);
    center(yc);
    double g00 = 0, g01 = 0, g11 = 0, h0 = 0, h1 = 0, sxx = 0;
    for (std::size_t t = 0; t < m; ++t) {
        g00 += yc(t, 0) * yc(t, 0);
        g01 += yc(t, 0) * yc(t, 1);
        g11 += yc(t, 1) * yc(t, 1);
        h0 += yc(t, 0) * xc(t, 0);
        h1 += yc(t, 1) * xc(t, 0);
        sxx += xc(t, 0) * xc(t, 0);
    }
    const double det = g00 * g11 - g01 * g01;
    const double b0 = (g11 * h0 - g01 * h1) / det;
    const double b1 = (g00 * h1 - g01 * h0) / det;
    double ss_reg = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        const double fit = b0 * yc(t, 0) + b1 * yc(t, 1);
        ss_reg += fit * fit;
    }
    const double r2 = ss_reg / sxx;

    // The closed-form identity holds when Y's covariance is spherical;
    // enforce that by orthonormalizing Y's columns first.
    Mat ys(m, 2);
    const double n0 = std::sqrt(g00);
    for (std::size_t t = 0; t < m; ++t) ys(t, 0) = yc(t, 0) / n0;
    double dot = 0.0;
    for (std::size_t t = 0; t < m; ++t) dot += ys(t, 0) * yc(t, 1);
    double n1 = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        ys(t, 1) = yc(t, 1) - dot * ys(t, 0);
        n1 += ys(t, 1) * ys(t, 1);
    }
    n1 = std::sqrt(n1);
    for (std::size_t t = 0; t < m; ++t) ys(t, 1) /= n1;

    // Recompute R^2 against the orthonormalized regressors (same span, so
    // the same value) and compare with RV * sqrt(2).
    const double rv = rv_coefficient(x, ys);
    double h0s = 0, h1s = 0;
    for (std::size_t t = 0; t < m; ++t) {
        h0s += ys(t, 0) * xc(t, 0);
        h1s += ys(t, 1) * xc(t, 0);
    }
    const double r2s = (h0s * h0s + h1s * h1s) / sxx;
    CHECK(std::fabs(r2s - r2) < 1e-9);
    CHECK(std::fabs(rv - r2 / std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("distance law") {
    CHECK(rv_distance(1.0) == 0.0);
    CHECK(std::fabs(rv_distance(0.0) - std::sqrt(2.0)) < 1e-15);
    CHECK(rv_distance(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(rv_distance(-0.1), NumericError);
    CHECK_THROWS_AS(rv_distance(1.1), NumericError);
}

TEST_CASE("similarity matrix: identical assets") {
    auto returns = random_returns(1, 30, 21);
    returns.push_back(returns[0]);
    returns[1].asset_code = "ZZZ";
    const auto sim = build_similarity_matrix(returns);
    CHECK(sim.rv(0, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sim.dist(0, 1) < 1e-6);
}

TEST_CASE("similarity matrix: scaled asset has RV 1") {
    auto returns = random_returns(2, 30, 22);
    ReturnMatrix scaled = returns[0];
    scaled.asset_code = "CCC";
    for (double& v : scaled.data.data) v *= 3.0;
    returns.push_back(std::move(scaled));
    const auto sim = build_similarity_matrix(returns);
    CHECK(sim.rv(0, 2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("similarity matrix matches the naive double-loop oracle") {
    const auto returns = random_returns(5, 25, 23);
    const auto sim = build_similarity_matrix(returns);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(sim.rv(i, i) == 1.0);
        CHECK(sim.dist(i, i) == 0.0);
        for (std::size_t j = 0; j < 5; ++j) {
            if (i == j) continue;
            const double expect = oracle::rv(returns[i].data, returns[j].data);
            CHECK(std::fabs(sim.rv(i, j) - expect) < 1e-12);
            CHECK(std::fabs(sim.dist(i, j) - std::sqrt(2.0 * (1.0 - expect))) < 1e-12);
        }
    }
}

TEST_CASE("parallel similarity matrix equals the serial reference exactly") {
    const auto returns = random_returns(24, 60, 24);
    const auto par = build_similarity_matrix(returns);
    const auto ser = serial::build_similarity_matrix(returns);
    CHECK(par.rv == ser.rv);
    CHECK(par.dist == ser.dist);
    CHECK(par.assets == ser.assets);
}

TEST_CASE("similarity matrix names the degenerate asset") {
    auto returns = random_returns(3, 20, 25);
    for (double& v : returns[1].data.data) v = 0.25;
    CHECK_THROWS_WITH_AS(build_similarity_matrix(returns), doctest::Contains("ABB"),
                         NumericError);
}

TEST_CASE("RV properties on random pairs") {
    std::mt19937_64 rng(26);
    std::uniform_int_distribution<std::size_t> rows(3, 80);
    std::uniform_real_distribution<double> scale(0.1, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = rows(rng);
        const Mat x = oracle::random_matrix(m, 2, rng);
        const Mat y = oracle::random_matrix(m, 2, rng);
        const double rv_xy = rv_coefficient(x, y);
        const double rv_yx = rv_coefficient(y, x);
        CHECK(std::fabs(rv_xy - rv_yx) < 1e-12);        // symmetry
        CHECK(rv_xy >= 0.0);                            // bounds
        CHECK(rv_xy <= 1.0 + 1e-12);
        CHECK(std::fabs(rv_xy - oracle::rv(x, y, true)) < 1e-12);  // divisor m

        // Translation/scale invariance in the first argument.
        Mat xs(m, 2);
        const double a = scale(rng);
        for (std::size_t t = 0; t < m; ++t) {
            xs(t, 0) = a * x(t, 0) + 3.7;
            xs(t, 1) = a * x(t, 1) - 1.2;
        }
        CHECK(std::fabs(rv_coefficient(xs, y) - rv_xy) < 1e-12);
    }
}

TEST_CASE("distance pseudo-metric on random triples") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 12;
        const Mat x = oracle::random_matrix(m, 2, rng);
        const Mat y = oracle::random_matrix(m, 2, rng);
        const Mat l = oracle::random_matrix(m, 2, rng);
        const double dxy = rv_distance(rv_coefficient(x, y));
        const double dyx = rv_distance(rv_coefficient(y, x));
        const double dxl = rv_distance(rv_coefficient(x, l));
        const double dly = rv_distance(rv_coefficient(l, y));
        CHECK(dxy >= 0.0);
        CHECK(std::fabs(dxy - dyx) < 1e-12);
        CHECK(rv_distance(rv_coefficient(x, x)) < 1e-7);
        CHECK(dxy <= dxl + dly + 1e-9);
    }
}
