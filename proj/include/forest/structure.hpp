#pragma once

#include <vector>

#include "forest/graph.hpp"
#include "forest/rational.hpp"

namespace forest {

struct Component {
  Graph graph;
  /// vertices[i] is the original vertex of component vertex i.
  std::vector<Vertex> vertices;
};

struct ComponentSplit {
  /// Connected components with at least one edge, ordered by smallest vertex.
  std::vector<Component> parts;
  int isolated = 0;
};

ComponentSplit components(const Graph& g);

/// Cut edges, ascending by EdgeId.
std::vector<EdgeId> bridges(const Graph& g);

/// Bridges whose removal leaves an edge on both sides.
std::vector<EdgeId> large_bridges(const Graph& g);

/// Number of other edges sharing an endpoint with e: d(u) + d(v) - 2.
int edge_codegree(const Graph& g, EdgeId e);

inline constexpr int kCheegerVertexCap = 20;

/// min |E(X, V\X)| / vol(X) over nonempty X with vol(X) <= vol(V)/2, by
/// exhaustive subset enumeration. Isolated vertices are dropped first; zero
/// for graphs with more than one nontrivial component.
/// Throws Error{EmptyGraph | SizeCapExceeded}.
Rational cheeger_constant(const Graph& g);

/// True iff Aut(g) acts transitively on the edge set. Edgeless graphs count
/// as edge-transitive. Throws Error{SizeCapExceeded} for n > 16.
bool is_edge_transitive(const Graph& g);

/// Orbit index of each edge under Aut(g); orbits are numbered by first edge.
std::vector<int> edge_orbits(const Graph& g);

}  // namespace forest
