#include "kneser/clique_cover.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "kneser/clique.hpp"

namespace kneser {

std::string_view to_string(CoverStrategy s) {
  switch (s) {
    case CoverStrategy::edge_greedy: return "edge_greedy";
    case CoverStrategy::vertex_greedy: return "vertex_greedy";
    case CoverStrategy::random_order: return "random_order";
  }
  return "?";
}

CoverStrategy parse_cover_strategy(std::string_view name) {
  if (name == "edge_greedy") return CoverStrategy::edge_greedy;
  if (name == "vertex_greedy") return CoverStrategy::vertex_greedy;
  if (name == "random_order") return CoverStrategy::random_order;
  throw ParameterError("unknown cover strategy '" + std::string(name) + "'");
}

namespace {

class GreedyCoverer {
 public:
  explicit GreedyCoverer(const Graph& g)
      : g_(g), n_(g.vertex_count()), load_(n_, 0), gain_(n_, 0) {
    uncovered_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) uncovered_.push_back(g.neighbors(v));
  }

  CliqueCover run(bool edge_first) {
    CliqueCover cover{n_, {}};
    Vertex u = 0;
    while (true) {
      while (u < n_ && uncovered_[u].none()) ++u;
      if (u == n_) break;
      std::vector<Vertex> clique{u};
      Bitset candidates = g_.neighbors(u);
      if (edge_first) {
        const auto v = static_cast<Vertex>(uncovered_[u].first());
        clique.push_back(v);
        candidates &= g_.neighbors(v);
      }
      grow(clique, candidates);
      std::sort(clique.begin(), clique.end());
      for (std::size_t i = 0; i < clique.size(); ++i) {
        ++load_[clique[i]];
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
          uncovered_[clique[i]].reset(clique[j]);
          uncovered_[clique[j]].reset(clique[i]);
        }
      }
      cover.cliques.push_back(std::move(clique));
    }
    return cover;
  }

 private:
  // Extends `clique` to a maximal clique. gain_[w] counts uncovered edges
  // between candidate w and the current clique.
  void grow(std::vector<Vertex>& clique, Bitset candidates) {
    candidates.for_each([&](std::size_t w) {
      std::size_t gain = 0;
      for (Vertex c : clique) gain += uncovered_[c].test(w) ? 1 : 0;
      gain_[w] = gain;
    });
    while (candidates.any()) {
      std::size_t best = Bitset::npos;
      candidates.for_each([&](std::size_t w) {
        if (best == Bitset::npos || gain_[w] > gain_[best] ||
            (gain_[w] == gain_[best] && load_[w] < load_[best])) {
          best = w;
        }
      });
      const auto w = static_cast<Vertex>(best);
      clique.push_back(w);
      candidates.reset(w);
      candidates &= g_.neighbors(w);
      const Bitset& fresh = uncovered_[w];
      candidates.for_each([&](std::size_t x) { gain_[x] += fresh.test(x) ? 1 : 0; });
    }
  }

  const Graph& g_;
  Vertex n_;
  std::vector<Bitset> uncovered_;
  std::vector<std::size_t> load_;
  std::vector<std::size_t> gain_;
};

}  // namespace

CliqueCover greedy_cover(const Graph& g, CoverStrategy strategy, const Seed& seed) {
  switch (strategy) {
    case CoverStrategy::edge_greedy: return GreedyCoverer(g).run(true);
    case CoverStrategy::vertex_greedy: return GreedyCoverer(g).run(false);
    case CoverStrategy::random_order: {
      const Vertex n = g.vertex_count();
      std::vector<Vertex> order(n);  // order[new] = old
      std::iota(order.begin(), order.end(), Vertex{0});
      Rng rng(seed);
      rng.shuffle(order);
      const Graph relabelled = induced_subgraph(g, order);
      CliqueCover cover = GreedyCoverer(relabelled).run(true);
      for (auto& c : cover.cliques) {
        for (auto& v : c) v = order[v];
        std::sort(c.begin(), c.end());
      }
      return cover;
    }
  }
  return {};
}

std::vector<std::size_t> cover_loads(const CliqueCover& c) {
  std::vector<std::size_t> load(c.n, 0);
  for (const auto& clique : c.cliques) {
    for (Vertex v : clique) ++load.at(v);
  }
  return load;
}

std::size_t thickness(const CliqueCover& c) {
  const auto load = cover_loads(c);
  return load.empty() ? 0 : *std::max_element(load.begin(), load.end());
}

std::size_t cover_size(const CliqueCover& c) { return c.cliques.size(); }

CliqueColoring chromatic_index_greedy(const CliqueCover& c) {
  CliqueColoring out;
  std::vector<Bitset> used;  // vertices occupied by each class
  for (const auto& clique : c.cliques) {
    std::size_t cls = 0;
    for (; cls < used.size(); ++cls) {
      bool free = true;
      for (Vertex v : clique) free = free && !used[cls].test(v);
      if (free) break;
    }
    if (cls == used.size()) used.emplace_back(c.n);
    for (Vertex v : clique) used[cls].set(v);
    out.color.push_back(cls);
  }
  out.classes = used.size();
  return out;
}

Report validate_cover(const Graph& g, const CliqueCover& c) {
  const Vertex n = g.vertex_count();
  if (c.n != n) {
    return Report::fail("cover is for " + std::to_string(c.n) + " vertices, graph has " +
                        std::to_string(n));
  }
  std::vector<Bitset> covered(n, Bitset(n));
  for (std::size_t i = 0; i < c.cliques.size(); ++i) {
    const auto& clique = c.cliques[i];
    for (std::size_t a = 0; a < clique.size(); ++a) {
      if (clique[a] >= n) {
        return Report::fail("clique " + std::to_string(i) + " has out-of-range vertex " +
                            std::to_string(clique[a]));
      }
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        const Vertex u = std::min(clique[a], clique[b]);
        const Vertex v = std::max(clique[a], clique[b]);
        if (u == v || v >= n || !g.adjacent(u, v)) {
          return Report::fail("clique " + std::to_string(i) + " is not a clique: {" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  "} is not an edge",
                              u, v);
        }
        covered[u].set(v);
        covered[v].set(u);
      }
    }
  }
  for (auto [u, v] : g.edges()) {
    if (!covered[u].test(v)) {
      return Report::fail("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} is not covered",
                          u, v);
    }
  }
  return Report::ok();
}

std::size_t theta0_lower_bound(const Graph& g) {
  const DegreeStats s = degree_stats(g);
  if (s.edges == 0) return 0;
  const std::size_t omega = clique_number(g);
  return (s.max_degree + omega - 2) / (omega - 1);
}

// ---------------------------------------------------------------------------
// Exact thickness.

namespace detail {

/// Depth-first search over clique covers with every vertex load <= cap.
/// Branches on the lowest uncovered edge; candidate cliques contain that
/// edge, live inside the common neighborhood, and are not dominated by a
/// sub-clique covering the same uncovered edges. Leaves are passed to
/// `accept`; the search stops at the first accepted leaf.
class CoverSearch {
 public:
  using Acceptor = CoverAcceptor;

  CoverSearch(const Graph& g, std::size_t cap, Acceptor accept)
      : g_(g), n_(g.vertex_count()), cap_(cap), accept_(std::move(accept)), load_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) uncovered_.push_back(g.neighbors(v));
    omega_ = std::max<std::size_t>(clique_number(g), 2);
  }

  bool run() { return dfs(); }
  const std::vector<std::vector<Vertex>>& solution() const { return solution_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool feasible() const {
    for (Vertex w = 0; w < n_; ++w) {
      const std::size_t open = uncovered_[w].count();
      if (open > (cap_ - load_[w]) * (omega_ - 1)) return false;
    }
    return true;
  }

  void cliques_within(const Bitset& pool, std::size_t from, std::vector<Vertex>& cur,
                      std::vector<std::vector<Vertex>>& out) const {
    out.push_back(cur);
    for (std::size_t w = pool.next(from); w != Bitset::npos; w = pool.next(w + 1)) {
      bool ok = true;
      for (Vertex c : cur) ok = ok && g_.adjacent(c, static_cast<Vertex>(w));
      if (!ok) continue;
      cur.push_back(static_cast<Vertex>(w));
      cliques_within(pool, w + 1, cur, out);
      cur.pop_back();
    }
  }

  bool useful(const std::vector<Vertex>& clique, Vertex u, Vertex v) const {
    for (Vertex w : clique) {
      if (w == u || w == v) continue;
      bool any = false;
      for (Vertex x : clique) any = any || (x != w && uncovered_[w].test(x));
      if (!any) return false;
    }
    return true;
  }

  bool dfs() {
    ++nodes_;
    Vertex u = 0;
    while (u < n_ && uncovered_[u].none()) ++u;
    if (u == n_) {
      if (accept_(chosen_, load_)) {
        solution_ = chosen_;
        return true;
      }
      return false;
    }
    if (!feasible()) return false;
    const auto v = static_cast<Vertex>(uncovered_[u].first());
    if (load_[u] >= cap_ || load_[v] >= cap_) return false;

    Bitset pool = g_.neighbors(u) & g_.neighbors(v);
    for (Vertex w = 0; w < n_; ++w) {
      if (load_[w] >= cap_) pool.reset(w);
    }
    std::vector<std::vector<Vertex>> extensions;
    std::vector<Vertex> cur;
    cliques_within(pool, 0, cur, extensions);
    std::vector<std::vector<Vertex>> options;
    for (auto& ext : extensions) {
      ext.push_back(u);
      ext.push_back(v);
      std::sort(ext.begin(), ext.end());
      if (useful(ext, u, v)) options.push_back(std::move(ext));
    }
    std::stable_sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });

    for (const auto& clique : options) {
      std::vector<Edge> newly;
      for (std::size_t i = 0; i < clique.size(); ++i) {
        ++load_[clique[i]];
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
          if (uncovered_[clique[i]].test(clique[j])) {
            newly.emplace_back(clique[i], clique[j]);
            uncovered_[clique[i]].reset(clique[j]);
            uncovered_[clique[j]].reset(clique[i]);
          }
        }
      }
      chosen_.push_back(clique);
      if (dfs()) return true;
      chosen_.pop_back();
      for (auto [a, b] : newly) {
        uncovered_[a].set(b);
        uncovered_[b].set(a);
      }
      for (Vertex w : clique) --load_[w];
    }
    return false;
  }

  const Graph& g_;
  Vertex n_;
  std::size_t cap_;
  Acceptor accept_;
  std::size_t omega_ = 2;
  std::vector<Bitset> uncovered_;
  std::vector<std::size_t> load_;
  std::vector<std::vector<Vertex>> chosen_;
  std::vector<std::vector<Vertex>> solution_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

std::optional<std::vector<std::vector<Vertex>>> search_bounded_covers(
    const Graph& g, std::size_t cap, const CoverAcceptor& accept, std::uint64_t* nodes) {
  detail::CoverSearch search(g, cap, accept);
  const bool found = search.run();
  if (nodes != nullptr) *nodes += search.nodes();
  if (!found) return std::nullopt;
  return search.solution();
}

namespace {

void guard(const Graph& g, Vertex limit, const char* what) {
  if (g.vertex_count() > limit) {
    throw CapacityError(std::string(what) + " is limited to " + std::to_string(limit) +
                        " vertices, got " + std::to_string(g.vertex_count()));
  }
}

}  // namespace

Theta0Result exact_theta0_search(const Graph& g) {
  guard(g, kExactTheta0Limit, "exact thickness");
  Theta0Result result;
  result.cover.n = g.vertex_count();
  if (g.edge_count() == 0) return result;
  for (std::size_t t = theta0_lower_bound(g);; ++t) {
    auto found = search_bounded_covers(
        g, t, [](const auto&, const auto&) { return true; }, &result.nodes);
    if (found) {
      result.value = t;
      result.cover.cliques = std::move(*found);
      return result;
    }
  }
}

std::size_t exact_theta0(const Graph& g) { return exact_theta0_search(g).value; }

// ---------------------------------------------------------------------------
// Exact cover chromatic index.

namespace {

constexpr int kNone = -1;

/// Assigns each vertex, per class, either no block or a block label; blocks
/// must be cliques, and every edge must share a block in some class.
class ClassSearch {
 public:
  ClassSearch(const Graph& g, std::size_t classes)
      : g_(g), n_(g.vertex_count()), k_(classes), label_(n_, std::vector<int>(classes, kNone)),
        used_(classes, 0) {}

  bool run() { return assign(0); }
  std::uint64_t nodes() const { return nodes_; }

  std::vector<std::vector<std::vector<Vertex>>> classes() const {
    std::vector<std::vector<std::vector<Vertex>>> out(k_);
    for (std::size_t c = 0; c < k_; ++c) {
      std::vector<std::vector<Vertex>> blocks(used_[c]);
      for (Vertex v = 0; v < n_; ++v) {
        if (label_[v][c] != kNone) blocks[static_cast<std::size_t>(label_[v][c])].push_back(v);
      }
      for (auto& b : blocks) {
        if (b.size() >= 2) out[c].push_back(std::move(b));
      }
    }
    return out;
  }

 private:
  bool joinable(Vertex v, std::size_t c, int block) const {
    for (Vertex u = 0; u < v; ++u) {
      if (label_[u][c] == block && !g_.adjacent(u, v)) return false;
    }
    return true;
  }

  bool edges_covered(Vertex v) const {
    for (Vertex u = 0; u < v; ++u) {
      if (!g_.adjacent(u, v)) continue;
      bool shared = false;
      for (std::size_t c = 0; c < k_ && !shared; ++c) {
        shared = label_[v][c] != kNone && label_[v][c] == label_[u][c];
      }
      if (!shared) return false;
    }
    return true;
  }

  bool assign(Vertex v) {
    ++nodes_;
    if (v == n_) return true;
    return choose(v, 0);
  }

  bool choose(Vertex v, std::size_t c) {
    if (c == k_) return edges_covered(v) && assign(v + 1);
    const int fresh = used_[c];
    for (int block = 0; block <= fresh; ++block) {
      if (block < fresh && !joinable(v, c, block)) continue;
      label_[v][c] = block;
      if (block == fresh) ++used_[c];
      if (choose(v, c + 1)) return true;
      if (block == fresh) --used_[c];
    }
    label_[v][c] = kNone;
    return choose(v, c + 1);
  }

  const Graph& g_;
  Vertex n_;
  std::size_t k_;
  std::vector<std::vector<int>> label_;
  std::vector<int> used_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Theta0PrimeResult exact_theta0_prime_search(const Graph& g) {
  guard(g, kExactTheta0PrimeLimit, "exact cover chromatic index");
  Theta0PrimeResult result;
  if (g.edge_count() == 0) return result;
  for (std::size_t k = std::max<std::size_t>(theta0_lower_bound(g), 1);; ++k) {
    ClassSearch search(g, k);
    const bool found = search.run();
    result.nodes += search.nodes();
    if (found) {
      result.value = k;
      result.classes = search.classes();
      return result;
    }
  }
}

std::size_t exact_theta0_prime(const Graph& g) { return exact_theta0_prime_search(g).value; }

}  // namespace kneser
