#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "kneser/errors.hpp"
#include "kneser/graph.hpp"
#include "kneser/random.hpp"

namespace kneser {

/// Multiset of cliques covering every edge of a graph on n vertices.
/// Cliques are stored as sorted vertex lists; repeats are allowed.
struct CliqueCover {
  Vertex n = 0;
  std::vector<std::vector<Vertex>> cliques;

  friend bool operator==(const CliqueCover&, const CliqueCover&) = default;
};

enum class CoverStrategy { edge_greedy, vertex_greedy, random_order };

std::string_view to_string(CoverStrategy s);
CoverStrategy parse_cover_strategy(std::string_view name);

/// Greedy edge clique cover.
///
/// edge_greedy takes the lowest uncovered edge and grows it into a maximal
/// clique, each step adding the candidate that covers the most uncovered
/// edges (ties: lower current load, then lower label). vertex_greedy grows
/// cliques from the lowest vertex that still has uncovered edges.
/// random_order runs edge_greedy on a seeded relabelling.
CliqueCover greedy_cover(const Graph& g, CoverStrategy strategy, const Seed& seed);

/// Number of cliques through each vertex, with multiplicity.
std::vector<std::size_t> cover_loads(const CliqueCover& c);

/// Maximum load over vertices.
std::size_t thickness(const CliqueCover& c);

std::size_t cover_size(const CliqueCover& c);

struct CliqueColoring {
  std::size_t classes = 0;
  std::vector<std::size_t> color;  // color[i] for clique i
};

/// First-fit coloring of the cliques in listed order so that cliques in a
/// class are pairwise vertex-disjoint.
CliqueColoring chromatic_index_greedy(const CliqueCover& c);

/// Checks that every clique is a clique of g and every edge is covered.
Report validate_cover(const Graph& g, const CliqueCover& c);

/// ceil(Δ / (ω - 1)); 0 for an edgeless graph.
std::size_t theta0_lower_bound(const Graph& g);

/// Depth-first enumeration of clique covers in which every vertex lies in at
/// most `cap` cliques. Returns the first cover accepted by `accept`, which
/// sees the cliques and the per-vertex loads. Covers that differ only by
/// shrinking a clique without losing a newly covered edge are not all
/// enumerated: only the smaller one is.
using CoverAcceptor = std::function<bool(const std::vector<std::vector<Vertex>>&,
                                         const std::vector<std::size_t>&)>;
std::optional<std::vector<std::vector<Vertex>>> search_bounded_covers(
    const Graph& g, std::size_t cap, const CoverAcceptor& accept, std::uint64_t* nodes = nullptr);

/// Vertex-count guards of the exact cover solvers.
inline constexpr Vertex kExactTheta0Limit = 10;
inline constexpr Vertex kExactTheta0PrimeLimit = 7;

/// Minimum thickness over all clique covers, with an optimal cover.
struct Theta0Result {
  std::size_t value = 0;
  CliqueCover cover;
  std::uint64_t nodes = 0;
};

Theta0Result exact_theta0_search(const Graph& g);
std::size_t exact_theta0(const Graph& g);

/// Minimum over clique covers of the cover's chromatic index: the least k
/// such that E(G) is covered by k subgraphs whose components are complete.
struct Theta0PrimeResult {
  std::size_t value = 0;
  /// classes[c] lists the vertex-disjoint cliques of class c.
  std::vector<std::vector<std::vector<Vertex>>> classes;
  std::uint64_t nodes = 0;
};

Theta0PrimeResult exact_theta0_prime_search(const Graph& g);
std::size_t exact_theta0_prime(const Graph& g);

}  // namespace kneser
