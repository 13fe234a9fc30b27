#pragma once

#include <string>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle {

struct CanonicalForm {
  /// labeling[v] is the canonical label of vertex v.
  std::vector<Vertex> labeling;
  /// Equal for two graphs exactly when they are isomorphic.
  std::string certificate;
};

/// Partition refinement with individualization backtracking. Twin vertices
/// and automorphisms found at leaves prune the search tree. Intended for the
/// small graphs (n up to about 16) handled by the search tools.
CanonicalForm canonical_form(const Graph& g);

/// g relabeled by its canonical labeling.
Graph canonical_graph(const Graph& g);

}  // namespace oddcycle
