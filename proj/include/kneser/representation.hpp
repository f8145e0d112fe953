#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "kneser/bitset.hpp"
#include "kneser/errors.hpp"
#include "kneser/graph.hpp"

namespace kneser {

struct CliqueCover;

using Element = std::uint32_t;

/// Which relation between two sets makes their vertices adjacent.
///   kneser: A ∩ B = ∅ (sets of size exactly k, pairwise distinct)
///   min:    min(|A\B|, |B\A|) >= k
///   max:    max(|A\B|, |B\A|) >= k
///   avg:    |A △ B| >= 2k
enum class Mode { kneser, min, max, avg };

std::string_view to_string(Mode mode);
/// Throws ParameterError for an unknown name.
Mode parse_mode(std::string_view name);

/// Assignment vertex -> subset of the ground set {0..s-1}.
class SetRepresentation {
 public:
  SetRepresentation() = default;
  /// Every set must have size() == ground_size.
  SetRepresentation(std::size_t ground_size, std::vector<Bitset> sets);
  static SetRepresentation from_lists(std::size_t ground_size,
                                      const std::vector<std::vector<Element>>& sets);

  std::size_t ground_size() const { return ground_size_; }
  Vertex vertex_count() const { return static_cast<Vertex>(sets_.size()); }
  const Bitset& set(Vertex v) const { return sets_[v]; }
  const std::vector<Bitset>& sets() const { return sets_; }
  std::vector<Element> elements(Vertex v) const;

  /// |∪ A_i|
  std::size_t union_size() const;

  friend bool operator==(const SetRepresentation&, const SetRepresentation&) = default;

 private:
  std::size_t ground_size_ = 0;
  std::vector<Bitset> sets_;
};

struct RankedRepresentation {
  SetRepresentation rep;
  std::size_t rank = 0;
};

/// Whether two sets are "adjacent" under a difference mode (min, max, avg)
/// or under disjointness (kneser).
bool sets_related(const Bitset& a, const Bitset& b, Mode mode, std::size_t k);

/// The graph a representation defines. For kneser mode, throws
/// RepresentationError when a set has the wrong size or two sets coincide.
Graph induced_graph(const SetRepresentation& rep, Mode mode, std::size_t k);

/// Checks that rep represents g under (mode, k); reports the first violation.
/// Throws ParameterError when the vertex counts differ.
Report verify(const SetRepresentation& rep, const Graph& g, Mode mode, std::size_t k);

/// Co-star representation padded to a Kneser representation of g.
/// Complement edge {i,j} becomes the element equal to its rank among the
/// complement edges in lexicographic order; dummies follow.
RankedRepresentation co_star(const Graph& g);

/// Kneser representation of complement(g) from a clique cover of g:
/// clique i becomes element i, every set padded with fresh dummies up to
/// rank thickness + 1. Throws ParameterError if the cover is invalid.
RankedRepresentation kneser_from_cover(const Graph& g, const CliqueCover& cover);

/// The canonical representation of Kn(s, k): vertex i gets the i-th k-subset.
SetRepresentation kneser_canonical_representation(Vertex s, Vertex k);

/// Deletes elements (ascending, restarting after each success) while the
/// induced graph is unchanged, then compacts the ground set.
/// Mode must be min, max or avg.
SetRepresentation reduce(const SetRepresentation& rep, Mode mode, std::size_t k);

/// True when no single-element deletion preserves the induced graph.
bool is_reduced(const SetRepresentation& rep, Mode mode, std::size_t k);

struct Atom {
  Bitset pattern;                // vertices whose sets contain the elements
  std::vector<Element> elements; // sorted
};

/// Atoms ordered by their smallest element.
struct AtomPartition {
  std::vector<Atom> atoms;
};

AtomPartition atoms(const SetRepresentation& rep);

}  // namespace kneser
