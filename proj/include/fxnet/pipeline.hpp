#pragma once

#include <cstdint>
#include <string>

#include "fxnet/config.hpp"
#include "fxnet/export.hpp"

namespace fxnet {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs ingest -> returns -> RV matrix -> MST -> centralities -> ranking
/// and writes the requested output files. Deterministic in (input, config).
ReportBundle run_pipeline(const PipelineConfig& config);

/// Same pipeline on an in-memory panel; writes nothing.
ReportBundle analyze_panel(const PricePanel& panel, const PipelineConfig& config);

/// Synthetic CSV fixture: geometric random walks with a planted 3-block
/// correlation structure, ask = bid * (1 + small positive spread).
std::string generate_fixture(std::uint64_t seed, int n_assets, int n_days);

/// Single deterministic JSON document describing the whole run.
std::string emit_json_report(const ReportBundle& bundle);

}  // namespace fxnet
