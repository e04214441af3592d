#include "fxnet/export.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace fxnet {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<Edge> sorted_edges(const SpanningTree& tree) {
    auto edges = tree.edges;
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    return edges;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string export_dot(const ReportBundle& bundle) {
    std::ostringstream out;
    out << "graph currency_network {\n";
    for (std::size_t i = 0; i < bundle.sim.assets.size(); ++i) {
        out << "  \"" << bundle.sim.assets[i] << "\" [degree_c="
            << fmt("%.6f", bundle.scores[0].values[i]) << ", closeness_c="
            << fmt("%.6f", bundle.scores[1].values[i]) << ", betweenness_c="
            << fmt("%.6f", bundle.scores[2].values[i]) << ", eigenvector_c="
            << fmt("%.6f", bundle.scores[3].values[i]) << "];\n";
    }
    for (const auto& e : sorted_edges(bundle.tree)) {
        out << "  \"" << bundle.sim.assets[std::size_t(e.a)] << "\" -- \""
            << bundle.sim.assets[std::size_t(e.b)] << "\" [rv=" << fmt("%.6f", e.rv)
            << ", dist=" << fmt("%.6f", e.distance) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_graphml(const ReportBundle& bundle) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\""
        << " xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\""
        << " xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns"
        << " http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n";
    const char* node_keys[] = {"degree_c", "closeness_c", "betweenness_c", "eigenvector_c"};
    for (const char* key : node_keys)
        out << "  <key id=\"" << key << "\" for=\"node\" attr.name=\"" << key
            << "\" attr.type=\"double\"/>\n";
    out << "  <key id=\"rv\" for=\"edge\" attr.name=\"rv\" attr.type=\"double\"/>\n"
        << "  <key id=\"dist\" for=\"edge\" attr.name=\"dist\" attr.type=\"double\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (std::size_t i = 0; i < bundle.sim.assets.size(); ++i) {
        out << "    <node id=\"" << xml_escape(bundle.sim.assets[i]) << "\">\n";
        for (std::size_t m = 0; m < 4; ++m)
            out << "      <data key=\"" << node_keys[m] << "\">"
                << fmt("%.6f", bundle.scores[m].values[i]) << "</data>\n";
        out << "    </node>\n";
    }
    for (const auto& e : sorted_edges(bundle.tree)) {
        out << "    <edge source=\"" << xml_escape(bundle.sim.assets[std::size_t(e.a)])
            << "\" target=\"" << xml_escape(bundle.sim.assets[std::size_t(e.b)]) << "\">\n"
            << "      <data key=\"rv\">" << fmt("%.6f", e.rv) << "</data>\n"
            << "      <data key=\"dist\">" << fmt("%.6f", e.distance) << "</data>\n"
            << "    </edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

std::map<std::string, std::string> export_tables(const ReportBundle& bundle) {
    std::map<std::string, std::string> files;

    {
        std::ostringstream out;
        out << "code,degree,closeness,betweenness,eigenvector,"
               "degree_full,closeness_full,betweenness_full,eigenvector_full\n";
        for (std::size_t i = 0; i < bundle.sim.assets.size(); ++i) {
            out << bundle.sim.assets[i];
            for (std::size_t m = 0; m < 4; ++m)
                out << ',' << fmt("%.3f", bundle.scores[m].values[i]);
            for (std::size_t m = 0; m < 4; ++m)
                out << ',' << fmt("%.15g", bundle.scores[m].values[i]);
            out << '\n';
        }
        files["centrality.csv"] = out.str();
    }

    {
        std::ostringstream out;
        out << "code,frequency,levels\n";
        for (const auto& row : bundle.importance.rows) {
            std::string levels;
            for (const auto& [measure, level] : row.levels) {
                if (!levels.empty()) levels += ',';
                levels += std::to_string(level);
            }
            out << row.asset_code << ',' << row.frequency << ',' << csv_quote(levels) << '\n';
        }
        files["importance.csv"] = out.str();
    }

    {
        std::ostringstream out;
        out << "code\n";
        for (const auto& code : bundle.least) out << code << '\n';
        files["least_central.csv"] = out.str();
    }

    return files;
}

std::string export_matrix_csv(const std::vector<std::string>& codes, const Mat& matrix) {
    std::ostringstream out;
    out << "code";
    for (const auto& code : codes) out << ',' << code;
    out << '\n';
    for (std::size_t i = 0; i < codes.size(); ++i) {
        out << codes[i];
        for (std::size_t j = 0; j < codes.size(); ++j)
            out << ',' << fmt("%.12g", matrix(i, j));
        out << '\n';
    }
    return out.str();
}

}  // namespace fxnet
