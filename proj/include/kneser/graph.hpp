#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kneser/bitset.hpp"
#include "kneser/errors.hpp"
#include "kneser/random.hpp"

namespace kneser {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with one adjacency bitset per
/// vertex. Symmetric and irreflexive by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);
  Graph(Vertex n, std::span<const Edge> edges);

  Vertex vertex_count() const { return n_; }

  /// Throws ParameterError on a self-loop or an out-of-range endpoint.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }

  const Bitset& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }
  std::size_t edge_count() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_clique(std::span<const Vertex> vs) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex n_ = 0;
  std::vector<Bitset> adj_;
};

/// Bipartite graph with parts V1 = {0..n-1} and V2 = {0..n-1}; edges join a
/// left vertex to a right vertex.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  explicit BipartiteGraph(Vertex n);

  Vertex side_size() const { return n_; }
  void add_edge(Vertex left, Vertex right);
  bool adjacent(Vertex left, Vertex right) const { return rows_[left].test(right); }
  const Bitset& row(Vertex left) const { return rows_[left]; }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  /// The same graph on 2n vertices: left i becomes i, right j becomes n + j.
  Graph to_graph() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  Vertex n_ = 0;
  std::vector<Bitset> rows_;
};

struct DegreeStats {
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t edges = 0;
  friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};

/// G(n, p): every pair u < v, in lexicographic order, is drawn from the stream.
Graph gen_gnp(Vertex n, double p, const Seed& seed);

/// G(n, n, p): every (left, right) pair, row-major, is drawn from the stream.
BipartiteGraph gen_gnnp(Vertex n, double p, const Seed& seed);

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Shortest-path diameter; nullopt when disconnected. 0 for n <= 1.
std::optional<std::size_t> diameter(const Graph& g);

DegreeStats degree_stats(const Graph& g);

// Named families used throughout tests and the CLI.
Graph complete_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph path_graph(Vertex n);
Graph star_graph(Vertex leaves);
Graph matching_graph(Vertex t);
Graph kneser_graph(Vertex s, Vertex k);
Graph petersen_graph();

/// All k-subsets of {0..s-1} in lexicographic order; vertex order of
/// kneser_graph(s, k).
std::vector<std::vector<Vertex>> k_subsets(Vertex s, Vertex k);

}  // namespace kneser
