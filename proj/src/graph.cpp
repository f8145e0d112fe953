#include "kneser/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "kneser/errors.hpp"

namespace kneser {

Graph::Graph(Vertex n) : n_(n), adj_(n, Bitset(n)) {}

Graph::Graph(Vertex n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) {
    throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} out of range for n=" + std::to_string(n_));
  }
  if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adj_[u].reset(v);
  adj_[v].reset(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (std::size_t v = adj_[u].next(u + 1); v != Bitset::npos; v = adj_[u].next(v + 1)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

bool Graph::is_clique(std::span<const Vertex> vs) const {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= n_) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[j] >= n_ || !adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

BipartiteGraph::BipartiteGraph(Vertex n) : n_(n), rows_(n, Bitset(n)) {}

void BipartiteGraph::add_edge(Vertex left, Vertex right) {
  if (left >= n_ || right >= n_) {
    throw ParameterError("bipartite edge out of range for side size " + std::to_string(n_));
  }
  rows_[left].set(right);
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex l = 0; l < n_; ++l) {
    rows_[l].for_each([&](std::size_t r) { out.emplace_back(l, static_cast<Vertex>(r)); });
  }
  return out;
}

Graph BipartiteGraph::to_graph() const {
  Graph g(2 * n_);
  for (auto [l, r] : edges()) g.add_edge(l, n_ + r);
  return g;
}

namespace {
void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in [0,1], got " + std::to_string(p));
  }
}
}  // namespace

Graph gen_gnp(Vertex n, double p, const Seed& seed) {
  check_probability(p);
  Graph g(n);
  Rng rng(seed);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

BipartiteGraph gen_gnnp(Vertex n, double p, const Seed& seed) {
  check_probability(p);
  BipartiteGraph g(n);
  Rng rng(seed);
  for (Vertex l = 0; l < n; ++l) {
    for (Vertex r = 0; r < n; ++r) {
      if (rng.bernoulli(p)) g.add_edge(l, r);
    }
  }
  return g;
}

Graph complement(const Graph& g) {
  const Vertex n = g.vertex_count();
  Graph out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Graph out(static_cast<Vertex>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

std::optional<std::size_t> diameter(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), Bitset::npos);
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    std::size_t reached = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](std::size_t w) {
        if (dist[w] == Bitset::npos) {
          dist[w] = dist[u] + 1;
          best = std::max(best, dist[w]);
          ++reached;
          queue.push_back(static_cast<Vertex>(w));
        }
      });
    }
    if (reached != n) return std::nullopt;
  }
  return best;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  const Vertex n = g.vertex_count();
  if (n == 0) return s;
  s.min_degree = g.degree(0);
  std::size_t twice = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    s.max_degree = std::max(s.max_degree, d);
    s.min_degree = std::min(s.min_degree, d);
    twice += d;
  }
  s.edges = twice / 2;
  return s;
}

Graph complete_graph(Vertex n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw ParameterError("a cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(Vertex n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(Vertex leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph matching_graph(Vertex t) {
  Graph g(2 * t);
  for (Vertex i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

std::vector<std::vector<Vertex>> k_subsets(Vertex s, Vertex k) {
  std::vector<std::vector<Vertex>> out;
  if (k > s) return out;
  std::vector<Vertex> cur(k);
  for (Vertex i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == s - k + static_cast<Vertex>(i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (Vertex j = static_cast<Vertex>(i) + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Graph kneser_graph(Vertex s, Vertex k) {
  const auto sets = k_subsets(s, k);
  const auto n = static_cast<Vertex>(sets.size());
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      bool disjoint = true;
      for (Vertex x : sets[a]) {
        for (Vertex y : sets[b]) disjoint = disjoint && x != y;
      }
      if (disjoint) g.add_edge(a, b);
    }
  }
  return g;
}

Graph petersen_graph() { return kneser_graph(5, 2); }

}  // namespace kneser
