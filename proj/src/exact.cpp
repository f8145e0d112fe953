#include "kneser/exact.hpp"

#include <algorithm>
#include <string>

#include "kneser/clique_cover.hpp"

namespace kneser {

namespace {

void guard(const Graph& g, Vertex limit, const char* what) {
  if (g.vertex_count() > limit) {
    throw CapacityError(std::string(what) + " is limited to " + std::to_string(limit) +
                        " vertices, got " + std::to_string(g.vertex_count()));
  }
}

// One element per clique, then fresh dummies so every set has `rank` elements.
SetRepresentation pad_cliques(Vertex n, const std::vector<std::vector<Vertex>>& cliques,
                              std::size_t rank) {
  std::vector<std::vector<Element>> lists(n);
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    for (Vertex v : cliques[c]) lists[v].push_back(static_cast<Element>(c));
  }
  Element next = static_cast<Element>(cliques.size());
  for (auto& list : lists) {
    while (list.size() < rank) list.push_back(next++);
  }
  return SetRepresentation::from_lists(next, lists);
}

}  // namespace

SolverResult exact_f_kn(const Graph& g) {
  guard(g, kExactFknLimit, "exact Kneser rank");
  const Vertex n = g.vertex_count();
  SolverResult result;
  if (n == 0) {
    result.witness = SetRepresentation(0, {});
    return result;
  }
  const Graph h = complement(g);
  const Theta0Result theta = exact_theta0_search(h);
  result.nodes_explored = theta.nodes;
  const std::size_t t = std::max<std::size_t>(theta.value, 1);

  // Fully loaded vertices get no dummy, so their clique incidences must differ.
  auto distinct_full = [&](const std::vector<std::vector<Vertex>>& cliques,
                           const std::vector<std::size_t>& loads) {
    std::vector<Bitset> incidence(n, Bitset(cliques.size()));
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      for (Vertex v : cliques[c]) incidence[v].set(c);
    }
    std::vector<Bitset> full;
    for (Vertex v = 0; v < n; ++v) {
      if (loads[v] == t) full.push_back(std::move(incidence[v]));
    }
    std::sort(full.begin(), full.end(),
              [](const Bitset& a, const Bitset& b) { return lex_less(a, b); });
    return std::adjacent_find(full.begin(), full.end()) == full.end();
  };

  if (auto cliques = search_bounded_covers(h, t, distinct_full, &result.nodes_explored)) {
    result.value = t;
    result.witness = pad_cliques(n, *cliques, t);
    return result;
  }
  RankedRepresentation fallback = kneser_from_cover(h, theta.cover);
  result.value = fallback.rank;
  result.witness = std::move(fallback.rep);
  return result;
}

std::size_t complete_cap(Mode mode, std::size_t k) {
  switch (mode) {
    case Mode::min:
    case Mode::max:
      return k;
    case Mode::avg:
      return 2 * k;
    case Mode::kneser:
      break;
  }
  throw ParameterError("difference search needs mode min, max or avg");
}

namespace {

class DifferenceSearch {
 public:
  DifferenceSearch(const Graph& g, Mode mode, std::size_t k, std::size_t cap)
      : g_(g), mode_(mode), n_(g.vertex_count()), k_(k), cap_(cap) {
    const std::uint32_t full = (1u << n_) - 1;
    for (std::uint32_t p = 1; p < full; ++p) patterns_.push_back(p);
    // rem_[p][i][j]: patterns from index p on that hold i but not j.
    rem_.assign(patterns_.size() + 1, std::vector<std::size_t>(n_ * n_, 0));
    for (std::size_t p = patterns_.size(); p-- > 0;) {
      rem_[p] = rem_[p + 1];
      for (Vertex i = 0; i < n_; ++i) {
        for (Vertex j = 0; j < n_; ++j) {
          if (holds(patterns_[p], i) && !holds(patterns_[p], j)) ++rem_[p][i * n_ + j];
        }
      }
    }
    d_.assign(n_ * n_, 0);
    mult_.assign(patterns_.size(), 0);
  }

  bool run() { return dfs(0); }
  std::uint64_t nodes() const { return nodes_; }

  SetRepresentation witness() const {
    std::vector<std::vector<Element>> lists(n_);
    Element next = 0;
    for (std::size_t p = 0; p < patterns_.size(); ++p) {
      for (std::size_t c = 0; c < mult_[p]; ++c, ++next) {
        for (Vertex v = 0; v < n_; ++v) {
          if (holds(patterns_[p], v)) lists[v].push_back(next);
        }
      }
    }
    return SetRepresentation::from_lists(next, lists);
  }

 private:
  static bool holds(std::uint32_t pattern, Vertex v) { return (pattern >> v) & 1u; }

  // Nonedge violations only grow with d, so they are final once they occur.
  bool nonedge_broken(Vertex i, Vertex j) const {
    const std::size_t a = d_[i * n_ + j], b = d_[j * n_ + i];
    switch (mode_) {
      case Mode::min: return a >= k_ && b >= k_;
      case Mode::max: return a >= k_ || b >= k_;
      default: return a + b >= 2 * k_;
    }
  }

  bool edge_reachable(Vertex i, Vertex j, std::size_t p) const {
    const std::size_t a = d_[i * n_ + j] + cap_ * rem_[p][i * n_ + j];
    const std::size_t b = d_[j * n_ + i] + cap_ * rem_[p][j * n_ + i];
    switch (mode_) {
      case Mode::min: return a >= k_ && b >= k_;
      case Mode::max: return a >= k_ || b >= k_;
      default: return a + b >= 2 * k_;
    }
  }

  bool feasible(std::size_t p) const {
    for (Vertex i = 0; i < n_; ++i) {
      for (Vertex j = i + 1; j < n_; ++j) {
        if (g_.adjacent(i, j) ? !edge_reachable(i, j, p) : nonedge_broken(i, j)) return false;
      }
    }
    return true;
  }

  void add(std::uint32_t pattern, long delta) {
    for (Vertex i = 0; i < n_; ++i) {
      if (!holds(pattern, i)) continue;
      for (Vertex j = 0; j < n_; ++j) {
        if (!holds(pattern, j)) d_[i * n_ + j] += delta;
      }
    }
  }

  bool dfs(std::size_t p) {
    ++nodes_;
    if (!feasible(p)) return false;
    if (p == patterns_.size()) return true;
    const std::uint32_t pattern = patterns_[p];
    if (dfs(p + 1)) return true;
    std::size_t m = 1;
    for (; m <= cap_; ++m) {
      add(pattern, 1);
      mult_[p] = m;
      if (dfs(p + 1)) return true;
    }
    add(pattern, -static_cast<long>(m - 1));
    mult_[p] = 0;
    return false;
  }

  const Graph& g_;
  Mode mode_;
  Vertex n_;
  std::size_t k_;
  std::size_t cap_;
  std::vector<std::uint32_t> patterns_;
  std::vector<std::vector<std::size_t>> rem_;
  std::vector<std::size_t> d_;
  std::vector<std::size_t> mult_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<SetRepresentation> decide_difference_rep(const Graph& g, Mode mode, std::size_t k,
                                                       std::size_t cap, std::uint64_t* nodes) {
  guard(g, kExactDifferenceLimit, "difference representation search");
  complete_cap(mode, k);  // rejects kneser mode
  if (k == 0) throw ParameterError("rank k must be at least 1");
  if (cap == 0) throw ParameterError("multiplicity cap must be at least 1");
  DifferenceSearch search(g, mode, k, cap);
  const bool found = search.run();
  if (nodes) *nodes += search.nodes();
  if (!found) return std::nullopt;
  return search.witness();
}

SolverResult exact_f_mode(const Graph& g, Mode mode, const CapSchedule& caps) {
  guard(g, kExactDifferenceLimit, "exact difference rank");
  complete_cap(mode, 1);
  SolverResult kn = exact_f_kn(g);
  SolverResult result;
  result.nodes_explored = kn.nodes_explored;
  for (std::size_t k = 1; k < kn.value; ++k) {
    const std::size_t cap = caps ? caps(k) : complete_cap(mode, k);
    if (auto rep = decide_difference_rep(g, mode, k, cap, &result.nodes_explored)) {
      result.value = k;
      result.witness = std::move(*rep);
      return result;
    }
    if (cap < complete_cap(mode, k)) result.exact = false;
  }
  // A Kneser representation of rank k is a k-difference representation in
  // every mode: disjoint k-sets differ by k both ways, intersecting ones by less.
  result.value = kn.value;
  result.witness = std::move(kn.witness);
  return result;
}

namespace {

class PragueSearch {
 public:
  PragueSearch(const Graph& g, std::size_t k) : g_(g), n_(g.vertex_count()), k_(k) {
    color_.assign(k_, std::vector<std::uint32_t>(n_, 0));
    top_.assign(n_ + 1, std::vector<std::uint32_t>(k_, 0));
  }

  bool run() { return n_ == 0 || vertex(1); }
  std::uint64_t nodes() const { return nodes_; }
  const Colorings& colorings() const { return color_; }

 private:
  // Vertex 0 is the all-zero vector; top_[v][c] is the largest color used by
  // vertices before v in coordinate c, so new colors appear in order.
  bool vertex(Vertex v) {
    if (v == n_) return true;
    return coordinate(v, 0);
  }

  bool coordinate(Vertex v, std::size_t c) {
    ++nodes_;
    if (c == k_) {
      for (Vertex u = 0; u < v; ++u) {
        if (g_.adjacent(u, v)) continue;
        bool agree = false, differ = false;
        for (std::size_t x = 0; x < k_; ++x) {
          (color_[x][u] == color_[x][v] ? agree : differ) = true;
        }
        if (!agree || !differ) return false;
      }
      return vertex(v + 1);
    }
    const std::uint32_t limit = top_[v][c] + 1;
    for (std::uint32_t x = 0; x <= limit; ++x) {
      bool clash = false;
      for (Vertex u = 0; u < v && !clash; ++u) {
        clash = g_.adjacent(u, v) && color_[c][u] == x;
      }
      if (clash) continue;
      color_[c][v] = x;
      top_[v + 1][c] = std::max(top_[v][c], x);
      if (coordinate(v, c + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  Vertex n_;
  std::size_t k_;
  Colorings color_;
  std::vector<std::vector<std::uint32_t>> top_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolverResult exact_prague(const Graph& g) {
  guard(g, kExactPragueLimit, "exact Prague dimension");
  SolverResult result;
  if (g.vertex_count() == 0) {
    result.witness = Colorings{};
    return result;
  }
  for (std::size_t k = 1;; ++k) {
    PragueSearch search(g, k);
    const bool found = search.run();
    result.nodes_explored += search.nodes();
    if (found) {
      result.value = k;
      result.witness = search.colorings();
      return result;
    }
  }
}

Report verify_prague(const Colorings& colorings, const Graph& g) {
  const Vertex n = g.vertex_count();
  for (std::size_t c = 0; c < colorings.size(); ++c) {
    if (colorings[c].size() != n) {
      return Report::fail("coloring " + std::to_string(c) + " has " +
                          std::to_string(colorings[c].size()) + " entries, expected " +
                          std::to_string(n));
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      std::size_t agree = 0;
      for (const auto& phi : colorings) agree += phi[u] == phi[v];
      const std::string pair = "pair (" + std::to_string(u) + "," + std::to_string(v) + "): ";
      if (g.adjacent(u, v) && agree > 0) {
        return Report::fail(pair + "adjacent but equal in some coordinate", u, v);
      }
      if (!g.adjacent(u, v) && agree == 0) {
        return Report::fail(pair + "nonadjacent but different in every coordinate", u, v);
      }
      if (agree == colorings.size()) {
        return Report::fail(pair + "identical color vectors", u, v);
      }
    }
  }
  return Report::ok();
}

}  // namespace kneser
