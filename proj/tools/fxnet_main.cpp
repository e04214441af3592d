#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fxnet/error.hpp"
#include "fxnet/pipeline.hpp"

namespace {

int run_command(const fxnet::PipelineConfig& config) {
    try {
        const auto bundle = fxnet::run_pipeline(config);
        std::cout << "assets: " << bundle.asset_count << ", days: " << bundle.date_count
                  << ", mst edges: " << bundle.tree.edges.size() << "\n"
                  << "outputs written to " << config.out_dir << "\n";
        return fxnet::exit_code::ok;
    } catch (const fxnet::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return fxnet::exit_code::parse;
    } catch (const fxnet::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return fxnet::exit_code::validation;
    } catch (const fxnet::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return fxnet::exit_code::numeric;
    } catch (const fxnet::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return fxnet::exit_code::io;
    }
}

int fixture_command(std::uint64_t seed, int assets, int days, const std::string& output) {
    try {
        const std::string csv = fxnet::generate_fixture(seed, assets, days);
        if (output.empty() || output == "-") {
            std::cout << csv;
        } else {
            std::ofstream out(output, std::ios::binary);
            if (!out) throw fxnet::IoError("cannot open " + output + " for writing");
            out << csv;
        }
        return fxnet::exit_code::ok;
    } catch (const fxnet::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return fxnet::exit_code::validation;
    } catch (const fxnet::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return fxnet::exit_code::io;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Currency similarity network analysis: RV coefficients, MST, centralities"};
    app.require_subcommand(1);

    fxnet::PipelineConfig config;
    std::string policy = "drop";
    std::string formats = "dot,graphml,json,csv";

    auto* run = app.add_subcommand("run", "Run the full analysis pipeline");
    run->add_option("--input", config.input_path, "Input CSV (date,code,bid,ask)")->required();
    run->add_option("--out-dir", config.out_dir, "Output directory")->required();
    run->add_option("--missing-policy", policy, "drop | ffill")
        ->check(CLI::IsMember({"drop", "ffill"}));
    run->add_option("--top-k", config.top_k, "Top-k nodes per centrality measure");
    run->add_option("--least-m", config.least_m, "Size of the least-central list");
    run->add_option("--formats", formats, "Comma-separated subset of dot,graphml,json,csv");
    run->add_option("--eig-tol", config.eig_tol, "Eigenvector convergence tolerance");
    run->add_option("--eig-max-iter", config.eig_max_iter, "Eigenvector iteration cap");
    run->add_flag("--dump-matrices", config.dump_matrices, "Also write rv/dist matrix CSVs");

    std::uint64_t seed = 1;
    int fx_assets = 45;
    int fx_days = 1250;
    std::string fx_output;
    auto* fixture = app.add_subcommand("fixture", "Generate a synthetic bid/ask CSV");
    fixture->add_option("--seed", seed, "RNG seed");
    fixture->add_option("--assets", fx_assets, "Number of assets");
    fixture->add_option("--days", fx_days, "Number of days");
    fixture->add_option("--output", fx_output, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        config.missing_policy = policy == "ffill" ? fxnet::MissingPolicy::ForwardFill
                                                  : fxnet::MissingPolicy::DropDate;
        config.formats.clear();
        std::size_t start = 0;
        while (start <= formats.size()) {
            const auto comma = formats.find(',', start);
            const auto item = formats.substr(start, comma - start);
            if (!item.empty()) config.formats.insert(item);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return run_command(config);
    }
    return fixture_command(seed, fx_assets, fx_days, fx_output);
}
