#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wilddiag/diagram.hpp"

namespace wilddiag {

/// Link between an equation's diagram and the diagram of its special linear
/// solutions: deleting remove_node yields the partner's diagram.
struct SpecialSolutionLink {
    std::string partner;
    int remove_node;
};

struct CatalogEntry {
    std::string name;
    std::string title;
    std::string source;  // input DSL text

    // Expectations in the builder's node order (cores, formal legs, tame legs).
    IntMat expected_cartan;
    std::vector<std::int64_t> expected_dims;
    std::int64_t expected_dim_b;
    int expected_nodes;

    std::optional<SpecialSolutionLink> special;

    // True when the expected shape comes from the standard Lax data rather
    // than a directly stated matrix.
    bool derived_expectations = false;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Throws validation_error for unknown names.
const CatalogEntry& catalog(const std::string& name);

}  // namespace wilddiag
