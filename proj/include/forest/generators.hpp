#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "forest/graph.hpp"

namespace forest {

namespace family {

struct Complete {
  int n;
};
struct CompleteBipartite {
  int s;
  int t;
};
struct CompleteMultipartite {
  std::vector<int> parts;
};
/// Path on n vertices.
struct Path {
  int n;
};
struct Cycle {
  int n;
};
/// K_{1,s}: centre 0, leaves 1..s.
struct Star {
  int s;
};
/// K_{k,k+1} plus one edge inside the part of size k+1.
struct BalancedBipartitePlusEdge {
  int k;
};
/// Uniform over graphs with n labeled vertices and exactly m edges.
struct Gnm {
  int n;
  int m;
  std::uint64_t seed;
};
/// Pairing model with rejection of loops and multi-edges.
struct RandomRegular {
  int n;
  int d;
  std::uint64_t seed;
};

}  // namespace family

using GeneratorSpec =
    std::variant<family::Complete, family::CompleteBipartite, family::CompleteMultipartite, family::Path,
                 family::Cycle, family::Star, family::BalancedBipartitePlusEdge, family::Gnm, family::RandomRegular>;

/// Pairing-model attempts before giving up with GenerationTimeout.
inline constexpr int kRegularRetryCap = 10'000;

/// Throws Error{InfeasibleSpec | GenerationTimeout}.
Graph generate(const GeneratorSpec& spec);

}  // namespace forest
