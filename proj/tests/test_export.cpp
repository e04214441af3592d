#include <doctest.h>

#include <charconv>
#include <cmath>
#include <sstream>

#include "fxnet/export.hpp"

using namespace fxnet;

namespace {

// Small fixed bundle: path AAA - BBB - CCC.
ReportBundle path3_bundle() {
    ReportBundle b;
    b.asset_count = 3;
    b.date_count = 4;
    b.first_date = "2020-01-01";
    b.last_date = "2020-01-04";
    b.sim.assets = {"AAA", "BBB", "CCC"};
    b.sim.rv = Mat(3, 3);
    b.sim.dist = Mat(3, 3);
    for (std::size_t i = 0; i < 3; ++i) b.sim.rv(i, i) = 1.0;
    b.sim.rv(0, 1) = b.sim.rv(1, 0) = 0.875;
    b.sim.rv(1, 2) = b.sim.rv(2, 1) = 0.82;
    b.sim.rv(0, 2) = b.sim.rv(2, 0) = 0.5;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j) b.sim.dist(i, j) = std::sqrt(2.0 * (1.0 - b.sim.rv(i, j)));
    b.tree = SpanningTree::from_edges(
        3, {{0, 1, b.sim.dist(0, 1), 0.875}, {1, 2, b.sim.dist(1, 2), 0.82}});
    b.scores = {CentralityScores{Measure::Degree, {0.5, 1.0, 0.5}},
                CentralityScores{Measure::Closeness, {2.0 / 3.0, 1.0, 2.0 / 3.0}},
                CentralityScores{Measure::Betweenness, {0.0, 1.0, 0.0}},
                CentralityScores{Measure::Eigenvector, {0.5, std::sqrt(0.5), 0.5}}};
    b.importance = importance_table(b.scores, b.sim.assets, 2);
    b.least = least_central(b.scores, b.sim.assets, 2);
    b.eigen_report = {std::sqrt(2.0), 42, 1e-12};
    return b;
}

ReportBundle two_node_bundle() {
    ReportBundle b;
    b.asset_count = 2;
    b.date_count = 3;
    b.first_date = "2020-01-01";
    b.last_date = "2020-01-03";
    b.sim.assets = {"AAA", "BBB"};
    b.sim.rv = Mat(2, 2);
    b.sim.dist = Mat(2, 2);
    b.sim.rv(0, 0) = b.sim.rv(1, 1) = 1.0;
    b.sim.rv(0, 1) = b.sim.rv(1, 0) = 0.5;
    b.sim.dist(0, 1) = b.sim.dist(1, 0) = 1.0;
    b.tree = SpanningTree::from_edges(2, {{0, 1, 1.0, 0.5}});
    b.scores = {CentralityScores{Measure::Degree, {1.0, 1.0}},
                CentralityScores{Measure::Closeness, {1.0, 1.0}},
                CentralityScores{Measure::Betweenness, {0.0, 0.0}},
                CentralityScores{Measure::Eigenvector, {std::sqrt(0.5), std::sqrt(0.5)}}};
    b.importance = importance_table(b.scores, b.sim.assets, 2);
    b.least = least_central(b.scores, b.sim.assets, 2);
    return b;
}

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (auto pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("DOT: two-node tree has exactly one edge statement") {
    const auto text = export_dot(two_node_bundle());
    CHECK(count_occurrences(text, "--") == 1);
    CHECK(text.find("\"AAA\" -- \"BBB\"") != std::string::npos);
}

TEST_CASE("DOT golden output for the 3-path bundle") {
    const std::string expect =
        "graph currency_network {\n"
        "  \"AAA\" [degree_c=0.500000, closeness_c=0.666667, betweenness_c=0.000000, "
        "eigenvector_c=0.500000];\n"
        "  \"BBB\" [degree_c=1.000000, closeness_c=1.000000, betweenness_c=1.000000, "
        "eigenvector_c=0.707107];\n"
        "  \"CCC\" [degree_c=0.500000, closeness_c=0.666667, betweenness_c=0.000000, "
        "eigenvector_c=0.500000];\n"
        "  \"AAA\" -- \"BBB\" [rv=0.875000, dist=0.500000];\n"
        "  \"BBB\" -- \"CCC\" [rv=0.820000, dist=0.600000];\n"
        "}\n";
    CHECK(export_dot(path3_bundle()) == expect);
}

TEST_CASE("exports are pure functions of the bundle") {
    const auto b = path3_bundle();
    CHECK(export_dot(b) == export_dot(b));
    CHECK(export_graphml(b) == export_graphml(b));
    CHECK(export_tables(b) == export_tables(b));
}

TEST_CASE("GraphML structure: N nodes, N-1 edges, declared keys") {
    const auto b = path3_bundle();
    const auto text = export_graphml(b);
    CHECK(count_occurrences(text, "<node id=") == 3);
    CHECK(count_occurrences(text, "<edge source=") == 2);
    for (const char* key : {"degree_c", "closeness_c", "betweenness_c", "eigenvector_c", "rv",
                            "dist"})
        CHECK(text.find(std::string("<key id=\"") + key + "\"") != std::string::npos);
    CHECK(count_occurrences(export_graphml(two_node_bundle()), "<edge source=") == 1);
}

TEST_CASE("centrality.csv carries 3-decimal and full-precision columns") {
    const auto b = path3_bundle();
    const auto files = export_tables(b);
    const auto& csv = files.at("centrality.csv");
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line ==
          "code,degree,closeness,betweenness,eigenvector,"
          "degree_full,closeness_full,betweenness_full,eigenvector_full");
    std::size_t row = 0;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        REQUIRE(fields.size() == 9);
        CHECK(fields[0] == b.sim.assets[row]);
        for (std::size_t m = 0; m < 4; ++m) {
            double full = 0.0;
            const auto& sf = fields[5 + m];
            std::from_chars(sf.data(), sf.data() + sf.size(), full);
            CHECK(std::fabs(full - b.scores[m].values[row]) < 1e-12);
        }
        ++row;
    }
    CHECK(row == 3);
}

TEST_CASE("importance.csv quotes the comma-joined levels") {
    ReportBundle b = path3_bundle();
    const auto files = export_tables(b);
    const auto& csv = files.at("importance.csv");
    // BBB wins all four measures at level 1 with k = 2.
    CHECK(csv.find("BBB,4,\"1,1,1,1\"") != std::string::npos);
}

TEST_CASE("matrix CSV dumps are labeled and 12-significant-digit") {
    const auto b = two_node_bundle();
    const auto text = export_matrix_csv(b.sim.assets, b.sim.rv);
    CHECK(text == "code,AAA,BBB\nAAA,1,0.5\nBBB,0.5,1\n");
}
