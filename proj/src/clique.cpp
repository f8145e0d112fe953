#include "kneser/clique.hpp"

#include <algorithm>
#include <numeric>

namespace kneser {

namespace {

// Bitset branch and bound in the style of BBMC: vertices are relabelled by
// non-increasing degree, candidates are greedily colored with bitset sweeps,
// and only vertices whose color can still beat the incumbent are branched on.
class Solver {
 public:
  explicit Solver(const Graph& g) : n_(g.vertex_count()), order_(n_), adj_(n_, Bitset(n_)) {
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<Vertex> position(n_);
    for (Vertex i = 0; i < n_; ++i) position[order_[i]] = i;
    for (Vertex i = 0; i < n_; ++i) {
      g.neighbors(order_[i]).for_each([&](std::size_t w) { adj_[i].set(position[w]); });
    }
    position_ = std::move(position);
  }

  Vertex size() const { return n_; }
  Vertex original(Vertex internal) const { return order_[internal]; }
  Vertex internal(Vertex original) const { return position_[original]; }

  /// Runs the search over `candidates` (internal labels). Stops early once a
  /// clique of size `stop_at` is known.
  void run(const Bitset& candidates, std::size_t initial_best, std::size_t stop_at,
           std::uint64_t budget) {
    best_size_ = initial_best;
    best_.clear();
    stop_at_ = stop_at;
    budget_ = budget;
    nodes_ = 0;
    aborted_ = false;
    root_bound_ = 0;
    current_.clear();
    expand(candidates, true);
  }

  std::size_t best_size() const { return best_size_; }
  const std::vector<Vertex>& best() const { return best_; }
  bool aborted() const { return aborted_; }
  std::size_t root_bound() const { return root_bound_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void color_sort(const Bitset& p, std::size_t kmin, std::vector<Vertex>& verts,
                  std::vector<std::size_t>& colors) const {
    Bitset uncolored = p;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (std::size_t v = q.first(); v != Bitset::npos; v = q.next(v + 1)) {
        uncolored.reset(v);
        q.subtract(adj_[v]);
        if (color >= kmin) {
          verts.push_back(static_cast<Vertex>(v));
          colors.push_back(color);
        }
      }
    }
  }

  void expand(Bitset p, bool root) {
    ++nodes_;
    if (budget_ != 0 && nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    const std::size_t kmin =
        best_size_ + 1 > current_.size() ? best_size_ + 1 - current_.size() : 1;
    std::vector<Vertex> verts;
    std::vector<std::size_t> colors;
    color_sort(p, kmin, verts, colors);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current_.size() + colors[i] <= best_size_) return;
      if (root) root_bound_ = colors[i];
      const Vertex v = verts[i];
      current_.push_back(v);
      Bitset next = p & adj_[v];
      if (next.none()) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
        }
      } else {
        expand(std::move(next), false);
      }
      current_.pop_back();
      if (aborted_ || best_size_ >= stop_at_) return;
      p.reset(v);
    }
  }

  Vertex n_;
  std::vector<Vertex> order_;
  std::vector<Vertex> position_;
  std::vector<Bitset> adj_;

  std::size_t best_size_ = 0;
  std::vector<Vertex> best_;
  std::vector<Vertex> current_;
  std::size_t stop_at_ = 0;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t root_bound_ = 0;
};

std::vector<Vertex> to_original(const Solver& s, const std::vector<Vertex>& internal) {
  std::vector<Vertex> out;
  out.reserve(internal.size());
  for (Vertex v : internal) out.push_back(s.original(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CliqueSearchResult clique_search(const Graph& g, const CliqueSearchOptions& options) {
  CliqueSearchResult result;
  const Vertex n = g.vertex_count();
  if (n == 0) {
    result.exact = true;
    return result;
  }
  Solver solver(g);
  solver.run(Bitset::full(n), 0, n + 1, options.node_budget);
  result.clique = to_original(solver, solver.best());
  result.nodes = solver.nodes();
  if (solver.aborted()) {
    result.upper_bound = std::max(solver.best_size(), solver.root_bound());
    result.exact = result.upper_bound == result.clique.size();
  } else {
    result.upper_bound = solver.best_size();
    result.exact = true;
  }
  return result;
}

std::vector<Vertex> max_clique(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n == 0) return {};
  Solver solver(g);
  solver.run(Bitset::full(n), 0, n + 1, 0);
  const std::size_t omega = solver.best_size();

  // Fix vertices in increasing original label, keeping v whenever the
  // remaining candidates after v still hold a clique completing omega.
  std::vector<Vertex> chosen;
  Bitset candidates = Bitset::full(n);  // original labels
  for (Vertex v = 0; v < n && chosen.size() < omega; ++v) {
    if (!candidates.test(v)) continue;
    Bitset rest = candidates & g.neighbors(v);
    for (Vertex u = 0; u <= v; ++u) rest.reset(u);
    const std::size_t need = omega - chosen.size() - 1;
    bool feasible = need == 0;
    if (!feasible && rest.count() >= need) {
      Bitset internal(n);
      rest.for_each([&](std::size_t w) { internal.set(solver.internal(static_cast<Vertex>(w))); });
      solver.run(internal, need - 1, need, 0);
      feasible = solver.best_size() >= need;
    }
    if (feasible) {
      chosen.push_back(v);
      candidates = std::move(rest);
    } else {
      candidates.reset(v);
    }
  }
  return chosen;
}

std::size_t clique_number(const Graph& g) {
  return clique_search(g).upper_bound;
}

}  // namespace kneser
