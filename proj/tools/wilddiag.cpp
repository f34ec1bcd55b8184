#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wilddiag/catalog.hpp"
#include "wilddiag/errors.hpp"
#include "wilddiag/parser.hpp"
#include "wilddiag/render.hpp"

namespace {

using namespace wilddiag;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string render(const BuildResult& result, const std::string& format, const std::string& name) {
    if (format == "text") return render_text(result);
    if (format == "json") return render_json(result);
    if (format == "dot") return render_dot(result, name);
    throw validation_error("unknown format '" + format + "'");
}

void run_checks(const InputDocument& doc, const BuildResult& result) {
    const std::int64_t oracle = dim_oracle(doc.input);
    if (oracle != result.cartan.dim_b)
        throw internal_error("dimension oracle " + std::to_string(oracle) +
                             " disagrees with 2 - (d,d) = " + std::to_string(result.cartan.dim_b));
    if (!result.diagram.adjacency().is_symmetric()) throw internal_error("adjacency not symmetric");
}

void check_expectations(const CatalogEntry& entry, const BuildResult& result) {
    if (result.cartan.cartan != entry.expected_cartan)
        throw internal_error("example '" + entry.name + "': Cartan matrix " +
                             result.cartan.cartan.to_string() + " does not match expected " +
                             entry.expected_cartan.to_string());
    if (result.cartan.dims != entry.expected_dims)
        throw internal_error("example '" + entry.name + "': dimension vector mismatch");
    if (result.cartan.dim_b != entry.expected_dim_b)
        throw internal_error("example '" + entry.name + "': dim_B mismatch");
    if (result.diagram.size() != entry.expected_nodes)
        throw internal_error("example '" + entry.name + "': node count mismatch");
}

IntMat load_matrix(const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw validation_error("'" + path + "': " + e.what());
    }
    if (doc.is_object()) {
        if (doc.contains("matrix"))
            doc = doc["matrix"];
        else if (doc.contains("cartan"))
            doc = doc["cartan"];
        else
            throw validation_error("'" + path + "' has no 'matrix' or 'cartan' key");
    }
    if (!doc.is_array()) throw validation_error("'" + path + "' does not contain a matrix");
    IntMat m(static_cast<int>(doc.size()));
    for (int i = 0; i < m.size(); ++i) {
        const auto& row = doc[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != m.size())
            throw validation_error("'" + path + "' is not a square matrix");
        for (int j = 0; j < m.size(); ++j) {
            const auto& cell = row[static_cast<std::size_t>(j)];
            if (!cell.is_number_integer())
                throw validation_error("'" + path + "' has a non-integer entry");
            m.at(i, j) = cell.get<std::int64_t>();
        }
    }
    return m;
}

int run(int argc, char** argv) {
    CLI::App app{"diagrams, Cartan matrices and moduli dimensions for algebraic connections on the affine line"};
    app.require_subcommand(1);

    std::string build_file, build_format = "text";
    bool build_check = false;
    auto* build_cmd = app.add_subcommand("build", "build the diagram of an input file");
    build_cmd->add_option("file", build_file, "input file")->required();
    build_cmd->add_option("--format", build_format, "text|json|dot")->default_str("text");
    build_cmd->add_flag("--check", build_check, "verify the dimension oracle against the diagram");

    std::string example_name, example_format = "text";
    bool example_check = false;
    auto* example_cmd = app.add_subcommand("example", "build a named example from the catalog");
    example_cmd->add_option("name", example_name, "example name (see list-examples)")->required();
    example_cmd->add_option("--format", example_format, "text|json|dot")->default_str("text");
    example_cmd->add_flag("--check", example_check, "also verify the stored expectations");

    auto* list_cmd = app.add_subcommand("list-examples", "list the built-in examples");

    std::string cg_a, cg_b, cg_g;
    auto* congruent_cmd = app.add_subcommand("congruent", "test g^T A g == B for integer matrices");
    congruent_cmd->add_option("A", cg_a, "JSON file with matrix A")->required();
    congruent_cmd->add_option("B", cg_b, "JSON file with matrix B")->required();
    congruent_cmd->add_option("g", cg_g, "JSON file with matrix g")->required();

    CLI11_PARSE(app, argc, argv);

    if (build_cmd->parsed()) {
        InputDocument doc = parse_input(read_file(build_file));
        BuildResult result = build_diagram(doc.input);
        result.warnings.insert(result.warnings.begin(), doc.warnings.begin(), doc.warnings.end());
        if (build_check) run_checks(doc, result);
        std::cout << render(result, build_format, build_file);
    } else if (example_cmd->parsed()) {
        const CatalogEntry& entry = catalog(example_name);
        InputDocument doc = parse_input(entry.source);
        BuildResult result = build_diagram(doc.input);
        result.warnings.insert(result.warnings.begin(), doc.warnings.begin(), doc.warnings.end());
        if (example_check) {
            run_checks(doc, result);
            check_expectations(entry, result);
        }
        std::cout << render(result, example_format, entry.name);
    } else if (list_cmd->parsed()) {
        for (const auto& entry : catalog_entries())
            std::cout << entry.name << "  -  " << entry.title << "\n";
    } else if (congruent_cmd->parsed()) {
        const IntMat a = load_matrix(cg_a);
        const IntMat b = load_matrix(cg_b);
        const IntMat g = load_matrix(cg_g);
        std::cout << (congruent(a, b, g) ? "true" : "false") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
