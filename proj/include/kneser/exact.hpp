#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "kneser/graph.hpp"
#include "kneser/representation.hpp"

namespace kneser {

/// colorings[c][v] is the color of vertex v in coordinate c.
using Colorings = std::vector<std::vector<std::uint32_t>>;

struct SolverResult {
  std::size_t value = 0;
  std::variant<SetRepresentation, Colorings> witness;
  std::uint64_t nodes_explored = 0;
  /// False when some refutation below `value` ran with a multiplicity cap
  /// too small to be conclusive.
  bool exact = true;
};

inline constexpr Vertex kExactFknLimit = 10;
inline constexpr Vertex kExactDifferenceLimit = 5;
inline constexpr Vertex kExactPragueLimit = 6;

/// Kneser rank. With t = θ0(complement g) the answer is t or t + 1; rank t
/// is decided by a search over clique covers of the complement with loads
/// at most t whose fully loaded vertices have distinct incidences.
SolverResult exact_f_kn(const Graph& g);

/// Exhaustive search over atom vectors: each nonempty proper vertex subset
/// gets a multiplicity in 0..cap. Patterns are visited in increasing bitmask
/// order, multiplicities from 0 up. Returns a materialized representation.
std::optional<SetRepresentation> decide_difference_rep(const Graph& g, Mode mode, std::size_t k,
                                                       std::size_t cap,
                                                       std::uint64_t* nodes = nullptr);

/// Smallest cap at which decide_difference_rep is conclusive: k for min and
/// max, 2k for avg. Above it every multiplicity can be lowered to the cap
/// without changing any predicate.
std::size_t complete_cap(Mode mode, std::size_t k);

using CapSchedule = std::function<std::size_t(std::size_t k)>;

/// Least k with a k-difference representation in the given mode. The cap
/// schedule defaults to complete_cap; a smaller cap makes refutations
/// inconclusive and the result is flagged exact = false.
SolverResult exact_f_mode(const Graph& g, Mode mode, const CapSchedule& caps = {});

/// Prague dimension: least k with colorings φ1..φk where adjacent vertices
/// differ in every coordinate, nonadjacent ones agree in some coordinate and
/// all color vectors are distinct.
SolverResult exact_prague(const Graph& g);

/// Checks the three Prague conditions.
Report verify_prague(const Colorings& colorings, const Graph& g);

}  // namespace kneser
