#pragma once

#include <cstdint>
#include <vector>

#include "kneser/graph.hpp"

namespace kneser {

struct CliqueSearchOptions {
  /// Abort after this many search nodes; 0 means unlimited. A node budget
  /// (rather than a wall clock) keeps truncated runs reproducible.
  std::uint64_t node_budget = 0;
};

struct CliqueSearchResult {
  std::vector<Vertex> clique;  // best clique found, sorted
  std::size_t upper_bound = 0; // proven upper bound on omega
  bool exact = false;          // clique.size() == omega
  std::uint64_t nodes = 0;
};

/// Branch and bound with greedy-coloring bounds over bitset adjacency.
/// When the budget runs out, `upper_bound` still bounds omega from above.
CliqueSearchResult clique_search(const Graph& g, const CliqueSearchOptions& options = {});

/// A maximum clique; among all maximum cliques, the lexicographically
/// smallest sorted vertex list. Empty for n = 0, {0} for an edgeless graph.
std::vector<Vertex> max_clique(const Graph& g);

/// omega(G), with omega = 1 for an edgeless graph on n >= 1 vertices.
std::size_t clique_number(const Graph& g);

}  // namespace kneser
