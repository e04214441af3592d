#pragma once

#include <set>
#include <string>

#include "fxnet/ingest.hpp"

namespace fxnet {

struct PipelineConfig {
    std::string input_path;
    std::string out_dir;
    MissingPolicy missing_policy = MissingPolicy::DropDate;
    int top_k = 8;
    int least_m = 10;
    std::set<std::string> formats = {"dot", "graphml", "json", "csv"};
    double eig_tol = 1e-10;
    int eig_max_iter = 10000;
    bool dump_matrices = false;
};

inline std::string missing_policy_name(MissingPolicy p) {
    return p == MissingPolicy::DropDate ? "drop" : "ffill";
}

}  // namespace fxnet
