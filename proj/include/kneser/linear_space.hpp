#pragma once

#include <cstdint>
#include <vector>

#include "kneser/clique_cover.hpp"
#include "kneser/errors.hpp"
#include "kneser/graph.hpp"
#include "kneser/random.hpp"

namespace kneser {

/// Points 0..points-1 and lines as sorted point lists. A linear space when
/// every pair of points lies on exactly one line (L1) and every line has at
/// least two points (L2).
struct LinearSpace {
  Vertex points = 0;
  std::vector<std::vector<Vertex>> lines;

  friend bool operator==(const LinearSpace&, const LinearSpace&) = default;
};

bool is_prime(std::uint64_t q);

/// The affine plane over F_q, q prime: point (x, y) is x*q + y; lines are
/// y = m x + b for every slope m and intercept b, then the verticals x = c.
/// Throws ParameterError when q is not prime.
LinearSpace affine_plane(std::uint32_t q);

/// Traces of the lines on `keep` with at least two points, relabelled so
/// that keep[i] becomes i. Kept pairs left without a line get an explicit
/// two-point line, so L1 holds on the result.
LinearSpace restrict_to_points(const LinearSpace& ls, const std::vector<Vertex>& keep);

struct SizedLinearSpace {
  LinearSpace space;
  std::uint32_t q = 0;
  std::size_t max_line_size = 0;
  std::size_t max_point_degree = 0;
};

/// AG(2, q) for the smallest prime q with q^2 >= n, restricted to a seeded
/// random n-subset of its points (kept in increasing order).
SizedLinearSpace linear_space_for(Vertex n, const Seed& seed);

/// Exhaustive L1 pair check and L2 size check.
Report validate_linear_space(const LinearSpace& ls);

/// Number of lines through each point.
std::vector<std::size_t> point_degrees(const LinearSpace& ls);

/// One cover per line: part i covers g restricted to line i (labels in g).
/// Line i uses the seed seed.child(i).
std::vector<CliqueCover> linear_space_cover_parts(const Graph& g, const LinearSpace& ls,
                                                  CoverStrategy inner, const Seed& seed);

/// Union of the per-line covers, in line order. Throws ParameterError when
/// the space's point count differs from the vertex count.
CliqueCover linear_space_cover(const Graph& g, const LinearSpace& ls, CoverStrategy inner,
                               const Seed& seed);

}  // namespace kneser
