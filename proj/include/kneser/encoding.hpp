#pragma once

#include <span>
#include <vector>

#include "kneser/bitset.hpp"
#include "kneser/errors.hpp"
#include "kneser/graph.hpp"
#include "kneser/representation.hpp"

namespace kneser {

/// Size-sorted matrix encoding of a representation of a bipartite graph.
///
/// left_order[i] is the original left vertex whose set is row i of
/// left_rows (the permutation π); likewise right_order / right_rows (ρ).
/// Rows are sorted by non-decreasing set size, stable on ties.
struct BipartiteEncoding {
  Vertex n = 0;
  std::size_t ground_size = 0;
  std::vector<Vertex> left_order;
  std::vector<Vertex> right_order;
  std::vector<Bitset> left_rows;
  std::vector<Bitset> right_rows;

  friend bool operator==(const BipartiteEncoding&, const BipartiteEncoding&) = default;
};

/// Both families must have the same length over a common ground set.
BipartiteEncoding encode_bipartite(std::span<const Bitset> left, std::span<const Bitset> right);

/// Splits a representation of a 2n-vertex graph (left i = i, right j = n + j)
/// and encodes it.
BipartiteEncoding encode_bipartite(const SetRepresentation& rep);

/// Reconstructs the bipartite graph under k-min-difference, restoring the
/// original labels. Throws ParameterError on inconsistent shapes.
BipartiteGraph decode_bipartite(const BipartiteEncoding& enc, std::size_t k);

/// Row sums non-decreasing.
bool rows_sorted_by_size(std::span<const Bitset> rows);

/// |row_i \ row_{i+1}| <= k - 1 for all consecutive rows; reports the first
/// offending row index.
Report check_consecutive_differences(std::span<const Bitset> rows, std::size_t k);

/// Vertical 1-over-0 and 0-over-1 positions of a 0/1 matrix.
struct ConfigurationCounts {
  std::size_t one_zero = 0;
  std::size_t zero_one = 0;
};

ConfigurationCounts count_configurations(std::span<const Bitset> rows);

/// Rebuilds every column from its top entry and the positions of its
/// one-zero and zero-one configurations.
std::vector<Bitset> rebuild_from_configurations(std::span<const Bitset> rows);

}  // namespace kneser
