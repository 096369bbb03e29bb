#pragma once

#include <string>
#include <string_view>

#include "forest/graph.hpp"

namespace forest {

/// Largest vertex count representable in the short graph6 header.
inline constexpr int kGraph6MaxVertices = 62;

/// Parses short-form graph6. Edges come out in column-major upper-triangle
/// order: (0,1), (0,2), (1,2), (0,3), ...
/// Throws Error{MalformedGraph6 | UnsupportedSize}.
Graph parse_graph6(std::string_view text);

/// Throws Error{UnsupportedSize} when n > 62.
std::string serialize_graph6(const Graph& g);

}  // namespace forest
