#pragma once

#include <string>

#include "wilddiag/diagram.hpp"

namespace wilddiag {

std::string render_text(const BuildResult& result);

/// Schema: {nodes:[{id,label,kind,dim}], edges:[{a,b,mult}], loops:[{node,mult}],
/// cartan:[[...]], pairing, dim_B, irr_end, rank, nonempty_assumed, warnings}.
std::string render_json(const BuildResult& result);

/// Graphviz output; negative multiplicities are drawn dashed with a "-m" label.
std::string render_dot(const BuildResult& result, const std::string& name = "diagram");

}  // namespace wilddiag
