#include "fxnet/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "fxnet/error.hpp"
#include "fxnet/returns.hpp"

namespace fxnet {

namespace {

template <class F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(std::string(name) + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(name) + ": " + e.what());
    } catch (const NumericError& e) {
        throw NumericError(std::string(name) + ": " + e.what());
    }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), std::streamsize(content.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

void check_config(const PipelineConfig& config) {
    if (config.top_k < 1) throw ValidationError("config: top_k must be >= 1");
    if (config.least_m < 1) throw ValidationError("config: least_m must be >= 1");
    if (config.formats.empty()) throw ValidationError("config: formats must be non-empty");
    for (const auto& f : config.formats)
        if (f != "dot" && f != "graphml" && f != "json" && f != "csv")
            throw ValidationError("config: unknown format '" + f + "'");
}

}  // namespace

ReportBundle analyze_panel(const PricePanel& panel, const PipelineConfig& config) {
    check_config(config);
    stage("validate", [&] {
        validate_panel(panel);
        return 0;
    });

    ReportBundle bundle;
    bundle.config = config;
    bundle.asset_count = panel.asset_count();
    bundle.date_count = panel.date_count();
    bundle.first_date = panel.dates.front().iso();
    bundle.last_date = panel.dates.back().iso();

    const auto returns = stage("returns", [&] { return panel_returns(panel); });
    bundle.sim = stage("similarity", [&] { return build_similarity_matrix(returns); });
    bundle.tree = stage("mst", [&] { return kruskal_mst(bundle.sim); });
    bundle.scores = stage("centrality", [&] {
        return all_centralities(bundle.tree, config.eig_tol, config.eig_max_iter,
                                &bundle.eigen_report);
    });

    const int k = std::min<int>(config.top_k, int(bundle.asset_count));
    const int m = std::min<int>(config.least_m, int(bundle.asset_count));
    bundle.importance =
        stage("ranking", [&] { return importance_table(bundle.scores, bundle.sim.assets, k); });
    bundle.least =
        stage("ranking", [&] { return least_central(bundle.scores, bundle.sim.assets, m); });
    return bundle;
}

ReportBundle run_pipeline(const PipelineConfig& config) {
    check_config(config);

    std::string text;
    {
        std::ifstream in(config.input_path, std::ios::binary);
        if (!in) throw IoError("cannot open input file: " + config.input_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    std::istringstream stream(text);
    const auto records = stage("ingest", [&] { return parse_price_records(stream); });
    const auto panel = stage("ingest", [&] { return align_panel(records, config.missing_policy); });

    ReportBundle bundle = analyze_panel(panel, config);

    const std::filesystem::path out_dir(config.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + config.out_dir);

    if (bundle.config.formats.contains("dot"))
        write_file(out_dir / "tree.dot", export_dot(bundle));
    if (bundle.config.formats.contains("graphml"))
        write_file(out_dir / "tree.graphml", export_graphml(bundle));
    if (bundle.config.formats.contains("json"))
        write_file(out_dir / "report.json", emit_json_report(bundle));
    if (bundle.config.formats.contains("csv"))
        for (const auto& [name, content] : export_tables(bundle))
            write_file(out_dir / name, content);
    if (bundle.config.dump_matrices) {
        write_file(out_dir / "rv_matrix.csv", export_matrix_csv(bundle.sim.assets, bundle.sim.rv));
        write_file(out_dir / "dist_matrix.csv",
                   export_matrix_csv(bundle.sim.assets, bundle.sim.dist));
    }
    return bundle;
}

std::string generate_fixture(std::uint64_t seed, int n_assets, int n_days) {
    if (n_assets < 2 || n_days < 3)
        throw ValidationError("bad dimensions: need n_assets >= 2 and n_days >= 3");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uni(0.0, 1.0);

    const int blocks = 3;
    // Per-day common factor for each correlation block.
    std::vector<std::vector<double>> factor(std::size_t(blocks),
                                            std::vector<double>(std::size_t(n_days - 1)));
    for (auto& f : factor)
        for (double& v : f) v = gauss(rng);

    std::ostringstream out;
    out << "date,code,bid,ask\n";
    char buf[32];
    for (int a = 0; a < n_assets; ++a) {
        // Codes AAA, AAB, ... sort in generation order, so blocks stay
        // contiguous after the lexicographic panel ordering.
        std::string code = {char('A' + a / 676), char('A' + (a / 26) % 26), char('A' + a % 26)};
        const int block = a * blocks / n_assets;
        double bid = 50.0 + 100.0 * uni(rng);
        // Day counter renders as a synthetic calendar: 28-day months.
        for (int d = 0; d < n_days; ++d) {
            if (d > 0) {
                const double ret = 0.010 * factor[std::size_t(block)][std::size_t(d - 1)] +
                                   0.004 * gauss(rng);
                bid *= std::exp(ret);
            }
            const double spread = 0.0010 + 0.0005 * uni(rng);
            const int year = 2008 + d / 336;
            const int month = 1 + (d % 336) / 28;
            const int day = 1 + d % 28;
            std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
            out << buf << ',' << code << ',';
            std::snprintf(buf, sizeof(buf), "%.10f", bid);
            out << buf << ',';
            std::snprintf(buf, sizeof(buf), "%.10f", bid * (1.0 + spread));
            out << buf << '\n';
        }
    }
    return out.str();
}

std::string emit_json_report(const ReportBundle& bundle) {
    nlohmann::json doc;
    doc["meta"] = {
        {"assets", bundle.asset_count},
        {"days", bundle.date_count},
        {"first_date", bundle.first_date},
        {"last_date", bundle.last_date},
        {"version", kToolVersion},
        {"config",
         {{"missing_policy", missing_policy_name(bundle.config.missing_policy)},
          {"top_k", bundle.config.top_k},
          {"least_m", bundle.config.least_m},
          {"formats", std::vector<std::string>(bundle.config.formats.begin(),
                                               bundle.config.formats.end())},
          {"eig_tol", bundle.config.eig_tol},
          {"eig_max_iter", bundle.config.eig_max_iter}}},
    };
    auto& nodes = doc["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < bundle.sim.assets.size(); ++i) {
        nodes.push_back({{"code", bundle.sim.assets[i]},
                         {"degree", bundle.scores[0].values[i]},
                         {"closeness", bundle.scores[1].values[i]},
                         {"betweenness", bundle.scores[2].values[i]},
                         {"eigenvector", bundle.scores[3].values[i]}});
    }
    auto& edges = doc["edges"] = nlohmann::json::array();
    auto tree_edges = bundle.tree.edges;
    std::sort(tree_edges.begin(), tree_edges.end(), [](const Edge& x, const Edge& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    for (const auto& e : tree_edges) {
        edges.push_back({{"a", bundle.sim.assets[std::size_t(e.a)]},
                         {"b", bundle.sim.assets[std::size_t(e.b)]},
                         {"rv", e.rv},
                         {"dist", e.distance}});
    }
    auto& importance = doc["importance"] = nlohmann::json::array();
    for (const auto& row : bundle.importance.rows) {
        std::vector<int> levels;
        std::vector<std::string> measures;
        for (const auto& [measure, level] : row.levels) {
            levels.push_back(level);
            measures.push_back(measure_name(measure));
        }
        importance.push_back({{"code", row.asset_code},
                              {"frequency", row.frequency},
                              {"levels", levels},
                              {"measures", measures}});
    }
    doc["least_central"] = bundle.least;
    doc["eigen_report"] = {{"lambda_max", bundle.eigen_report.lambda_max},
                           {"iterations", bundle.eigen_report.iterations},
                           {"residual", bundle.eigen_report.residual}};
    return doc.dump(2) + "\n";
}

}  // namespace fxnet
