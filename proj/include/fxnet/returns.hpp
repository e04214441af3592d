#pragma once

#include <span>
#include <string>
#include <vector>

#include "fxnet/ingest.hpp"
#include "fxnet/mat.hpp"

namespace fxnet {

/// Bivariate log-return series for one asset: (T-1) x 2,
/// column 0 = bid returns, column 1 = ask returns.
struct ReturnMatrix {
    std::string asset_code;
    Mat data;
};

/// output[t] = ln(prices[t+1]) - ln(prices[t])
std::vector<double> log_returns(std::span<const double> prices);

/// One ReturnMatrix per asset, in panel order.
std::vector<ReturnMatrix> panel_returns(const PricePanel& panel);

}  // namespace fxnet
