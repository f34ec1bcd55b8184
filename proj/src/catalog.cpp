#include "wilddiag/catalog.hpp"

#include "wilddiag/errors.hpp"

namespace wilddiag {

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    entries.push_back({
        "airy",
        "Airy equation",
        "infinity {\n  factor \"x^(3/2)\" mult 1\n}\n",
        make_mat({{2}}),
        {1},
        0,
        1,
        std::nullopt,
        false,
    });

    entries.push_back({
        "weber",
        "Weber (parabolic cylinder) equation",
        "infinity {\n  factor \"x^2\" mult 1\n  factor \"-x^2\" mult 1\n}\n",
        make_mat({{2, -1}, {-1, 2}}),
        {1, 1},
        0,
        2,
        std::nullopt,
        false,
    });

    entries.push_back({
        "bessel-clifford",
        "Bessel-Clifford (0F1) equation",
        "infinity {\n  factor \"x^(1/2)\" mult 1\n}\npole 0 { a: [1], b: [1] }\n",
        make_mat({{4, -2}, {-2, 2}}),
        {1, 1},
        0,
        2,
        std::nullopt,
        false,
    });

    entries.push_back({
        "kummer",
        "Kummer (1F1) equation",
        "infinity {\n  factor \"x\" mult 1\n  factor \"0\" mult 1\n}\npole 0 { a: [1], b: [1] }\n",
        make_mat({{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}}),
        {1, 1, 1},
        0,
        3,
        std::nullopt,
        false,
    });

    entries.push_back({
        "gauss",
        "Gauss (2F1) hypergeometric equation",
        "infinity {\n  factor \"0\" mult 2 monodromy { a: [1], b: [1] }\n}\n"
        "pole 0 { c: [1], d: [1] }\npole 1 { e: [1], f: [1] }\n",
        make_mat({{2, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}}),
        {2, 1, 1, 1},
        0,
        4,
        std::nullopt,
        false,
    });

    entries.push_back({
        "p1",
        "Painleve I",
        "infinity {\n  factor \"x^(5/2)\" mult 1\n}\n",
        make_mat({{0}}),
        {1},
        2,
        1,
        std::nullopt,
        false,
    });

    entries.push_back({
        "p2-jm",
        "Painleve II, Jimbo-Miwa Lax pair",
        "infinity {\n  factor \"x^3\" mult 1\n  factor \"-x^3\" mult 1\n}\n",
        make_mat({{2, -2}, {-2, 2}}),
        {1, 1},
        2,
        2,
        SpecialSolutionLink{"airy", 1},
        false,
    });

    entries.push_back({
        "p2-fn",
        "Painleve II, Flaschka-Newell Lax pair",
        "infinity {\n  factor \"x^(3/2)\" mult 1\n}\npole 0 { a: [1], b: [1] }\n",
        make_mat({{2, -2}, {-2, 2}}),
        {1, 1},
        2,
        2,
        SpecialSolutionLink{"airy", 1},
        false,
    });

    entries.push_back({
        "p3",
        "Painleve III, degenerate-P5 Lax pair",
        "infinity {\n  factor \"x^(1/2)\" mult 1\n}\n"
        "pole 0 { a: [1], b: [1] }\npole 1 { c: [1], d: [1] }\n",
        make_mat({{4, -2, -2}, {-2, 2, 0}, {-2, 0, 2}}),
        {1, 1, 1},
        2,
        3,
        SpecialSolutionLink{"bessel-clifford", 2},
        false,
    });

    entries.push_back({
        "p4",
        "Painleve IV",
        "infinity {\n  factor \"x^2\" mult 1\n  factor \"-x^2\" mult 1\n}\n"
        "pole 0 { a: [1], b: [1] }\n",
        make_mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}),
        {1, 1, 1},
        2,
        3,
        SpecialSolutionLink{"weber", 2},
        true,
    });

    entries.push_back({
        "p5",
        "Painleve V",
        "infinity {\n  factor \"x\" mult 1\n  factor \"-x\" mult 1\n}\n"
        "pole 0 { a: [1], b: [1] }\npole 1 { c: [1], d: [1] }\n",
        make_mat({{2, 0, -1, -1}, {0, 2, -1, -1}, {-1, -1, 2, 0}, {-1, -1, 0, 2}}),
        {1, 1, 1, 1},
        2,
        4,
        SpecialSolutionLink{"kummer", 3},
        true,
    });

    entries.push_back({
        "p6",
        "Painleve VI",
        "infinity {\n  factor \"0\" mult 2 monodromy { a: [1], b: [1] }\n}\n"
        "pole 0 { c: [1], d: [1] }\npole 1 { e: [1], f: [1] }\npole t { g: [1], h: [1] }\n",
        make_mat({{2, -1, -1, -1, -1},
                  {-1, 2, 0, 0, 0},
                  {-1, 0, 2, 0, 0},
                  {-1, 0, 0, 2, 0},
                  {-1, 0, 0, 0, 2}}),
        {2, 1, 1, 1, 1},
        2,
        5,
        SpecialSolutionLink{"gauss", 4},
        true,
    });

    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog(const std::string& name) {
    for (const auto& entry : catalog_entries())
        if (entry.name == name) return entry;
    throw validation_error("unknown example '" + name + "'");
}

}  // namespace wilddiag
