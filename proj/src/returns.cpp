#include "fxnet/returns.hpp"

#include <cmath>

#include "fxnet/error.hpp"

namespace fxnet {

std::vector<double> log_returns(std::span<const double> prices) {
    if (prices.size() < 2)
        throw ValidationError("series too short: need at least 2 prices");
    std::vector<double> out(prices.size() - 1);
    for (std::size_t t = 0; t + 1 < prices.size(); ++t) {
        if (!(prices[t] > 0.0) || !(prices[t + 1] > 0.0))
            throw ValidationError("non-positive price in return computation");
        out[t] = std::log(prices[t + 1]) - std::log(prices[t]);
    }
    return out;
}

std::vector<ReturnMatrix> panel_returns(const PricePanel& panel) {
    const std::size_t t_count = panel.date_count();
    std::vector<ReturnMatrix> result;
    result.reserve(panel.asset_count());
    for (std::size_t i = 0; i < panel.asset_count(); ++i) {
        std::vector<double> bids(t_count), asks(t_count);
        for (std::size_t t = 0; t < t_count; ++t) {
            bids[t] = panel.bid(i, t);
            asks[t] = panel.ask(i, t);
        }
        auto rb = log_returns(bids);
        auto ra = log_returns(asks);
        ReturnMatrix rm;
        rm.asset_code = panel.assets[i];
        rm.data = Mat(t_count - 1, 2);
        for (std::size_t t = 0; t + 1 < t_count; ++t) {
            rm.data(t, 0) = rb[t];
            rm.data(t, 1) = ra[t];
        }
        result.push_back(std::move(rm));
    }
    return result;
}

}  // namespace fxnet
