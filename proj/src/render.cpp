#include "wilddiag/render.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace wilddiag {

std::string render_text(const BuildResult& result) {
    const Diagram& g = result.diagram;
    std::ostringstream os;
    os << "nodes:\n";
    for (const auto& node : g.nodes())
        os << "  " << node.id << "  " << std::left << std::setw(11) << to_string(node.kind)
           << std::right << " dim " << node.dim << "  " << node.label << "\n";
    os << "edges:\n";
    bool any = false;
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (g.edge(i, j) != 0) {
                os << "  " << i << " -- " << j << "  mult " << g.edge(i, j) << "\n";
                any = true;
            }
    if (!any) os << "  (none)\n";
    os << "loops:\n";
    any = false;
    for (int i = 0; i < g.size(); ++i)
        if (g.loops(i) != 0) {
            os << "  " << i << "  mult " << g.loops(i) << "\n";
            any = true;
        }
    if (!any) os << "  (none)\n";
    os << "cartan:\n";
    const IntMat& c = result.cartan.cartan;
    for (int i = 0; i < c.size(); ++i) {
        os << "  [";
        for (int j = 0; j < c.size(); ++j) os << std::setw(4) << c.at(i, j);
        os << " ]\n";
    }
    os << "dims: (";
    for (std::size_t i = 0; i < result.cartan.dims.size(); ++i) {
        if (i) os << ", ";
        os << result.cartan.dims[i];
    }
    os << ")\n";
    os << "pairing (d,d) = " << result.cartan.pairing << "\n";
    os << "dim_B = 2 - (d,d) = " << result.cartan.dim_b << "  [nonempty assumed]\n";
    os << "irr_end = " << result.irr_end << "\n";
    os << "rank = " << result.rank << "\n";
    if (!result.warnings.empty()) {
        os << "warnings:\n";
        for (const auto& w : result.warnings) os << "  " << w << "\n";
    }
    return os.str();
}

std::string render_json(const BuildResult& result) {
    nlohmann::ordered_json doc;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (const auto& node : result.diagram.nodes())
        doc["nodes"].push_back({{"id", node.id},
                                {"label", node.label},
                                {"kind", to_string(node.kind)},
                                {"dim", node.dim}});
    doc["edges"] = nlohmann::ordered_json::array();
    for (int i = 0; i < result.diagram.size(); ++i)
        for (int j = i + 1; j < result.diagram.size(); ++j)
            if (result.diagram.edge(i, j) != 0)
                doc["edges"].push_back({{"a", i}, {"b", j}, {"mult", result.diagram.edge(i, j)}});
    doc["loops"] = nlohmann::ordered_json::array();
    for (int i = 0; i < result.diagram.size(); ++i)
        if (result.diagram.loops(i) != 0)
            doc["loops"].push_back({{"node", i}, {"mult", result.diagram.loops(i)}});
    doc["cartan"] = nlohmann::ordered_json::array();
    for (int i = 0; i < result.cartan.cartan.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < result.cartan.cartan.size(); ++j) row.push_back(result.cartan.cartan.at(i, j));
        doc["cartan"].push_back(row);
    }
    doc["pairing"] = result.cartan.pairing;
    doc["dim_B"] = result.cartan.dim_b;
    doc["irr_end"] = result.irr_end;
    doc["rank"] = result.rank;
    doc["nonempty_assumed"] = true;
    doc["warnings"] = result.warnings;
    return doc.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string render_dot(const BuildResult& result, const std::string& name) {
    const Diagram& g = result.diagram;
    std::ostringstream os;
    os << "graph \"" << dot_escape(name) << "\" {\n";
    os << "  node [shape=circle, fontsize=11];\n";
    for (const auto& node : g.nodes())
        os << "  n" << node.id << " [label=\"" << dot_escape(node.label) << "\\nd=" << node.dim
           << "\"];\n";
    for (int i = 0; i < g.size(); ++i) {
        for (int j = i + 1; j < g.size(); ++j) {
            const std::int64_t mult = g.edge(i, j);
            if (mult > 0)
                for (std::int64_t k = 0; k < mult; ++k) os << "  n" << i << " -- n" << j << ";\n";
            else if (mult < 0)
                os << "  n" << i << " -- n" << j << " [style=dashed, label=\"" << mult << "\"];\n";
        }
    }
    for (int i = 0; i < g.size(); ++i) {
        const std::int64_t loops = g.loops(i);
        if (loops > 0)
            for (std::int64_t k = 0; k < loops; ++k) os << "  n" << i << " -- n" << i << ";\n";
        else if (loops < 0)
            os << "  n" << i << " -- n" << i << " [style=dashed, label=\"" << loops << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace wilddiag
