#pragma once

#include <string>
#include <vector>

#include "wilddiag/diagram.hpp"

namespace wilddiag {

struct InputDocument {
    std::string source;
    ProblemInput input;
    std::vector<std::string> warnings;
};

/**
 * Parses the input DSL:
 *
 *   file   := stanza+
 *   stanza := "infinity" "{" circle+ "}" | "pole" LOC "{" class "}"
 *   circle := "factor" STRING "mult" INT ("monodromy" class)?
 *   class  := "{" LABEL ":" "[" INT ("," INT)* "]" ("," ...)* "}"
 *
 * Factor strings are signed sums of coeff? x-power terms; coefficients are
 * products of rationals, "i" and "zN^k" atoms. "#" starts a line comment.
 * Throws parse_error for malformed syntax and validation_error for
 * semantically invalid data (constant terms, nonpositive exponents, class
 * size mismatches, duplicate pole locations).
 */
InputDocument parse_input(const std::string& text);

/// Parses a single factor string such as "x^(3/2)" or "2x^3 + z3^1 x^(1/3)".
ExpFactor parse_factor(const std::string& text);

/// Canonical DSL form of an input; parse(canonical_source(parse(s))) equals
/// parse(s), and the canonical form is a fixed point.
std::string canonical_source(const ProblemInput& input);

}  // namespace wilddiag
