#include "kneser/linear_space.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace kneser {

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

LinearSpace affine_plane(std::uint32_t q) {
  if (!is_prime(q)) {
    throw ParameterError("affine_plane needs a prime order, got " + std::to_string(q));
  }
  LinearSpace ls;
  ls.points = q * q;
  for (std::uint32_t m = 0; m < q; ++m) {
    for (std::uint32_t b = 0; b < q; ++b) {
      std::vector<Vertex> line;
      for (std::uint32_t x = 0; x < q; ++x) line.push_back(x * q + (m * x + b) % q);
      ls.lines.push_back(std::move(line));
    }
  }
  for (std::uint32_t c = 0; c < q; ++c) {
    std::vector<Vertex> line;
    for (std::uint32_t y = 0; y < q; ++y) line.push_back(c * q + y);
    ls.lines.push_back(std::move(line));
  }
  return ls;
}

LinearSpace restrict_to_points(const LinearSpace& ls, const std::vector<Vertex>& keep) {
  if (keep.empty()) throw ParameterError("restrict_to_points needs a nonempty point set");
  constexpr Vertex kDropped = static_cast<Vertex>(-1);
  std::vector<Vertex> relabel(ls.points, kDropped);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= ls.points || relabel[keep[i]] != kDropped) {
      throw ParameterError("restrict_to_points: invalid or repeated point " +
                           std::to_string(keep[i]));
    }
    relabel[keep[i]] = static_cast<Vertex>(i);
  }
  LinearSpace out;
  out.points = static_cast<Vertex>(keep.size());
  std::vector<Bitset> joined(out.points, Bitset(out.points));
  for (const auto& line : ls.lines) {
    std::vector<Vertex> trace;
    for (Vertex p : line) {
      if (relabel[p] != kDropped) trace.push_back(relabel[p]);
    }
    if (trace.size() < 2) continue;
    std::sort(trace.begin(), trace.end());
    for (std::size_t a = 0; a < trace.size(); ++a) {
      for (std::size_t b = a + 1; b < trace.size(); ++b) {
        joined[trace[a]].set(trace[b]);
        joined[trace[b]].set(trace[a]);
      }
    }
    out.lines.push_back(std::move(trace));
  }
  for (Vertex a = 0; a < out.points; ++a) {
    for (Vertex b = a + 1; b < out.points; ++b) {
      if (!joined[a].test(b)) out.lines.push_back({a, b});
    }
  }
  return out;
}

SizedLinearSpace linear_space_for(Vertex n, const Seed& seed) {
  if (n < 2) throw ParameterError("linear_space_for needs n >= 2");
  std::uint32_t q = 2;
  while (static_cast<std::uint64_t>(q) * q < n || !is_prime(q)) ++q;
  const LinearSpace plane = affine_plane(q);
  std::vector<Vertex> points(plane.points);
  std::iota(points.begin(), points.end(), Vertex{0});
  if (n < plane.points) {
    Rng rng(seed);
    rng.shuffle(points);
    points.resize(n);
    std::sort(points.begin(), points.end());
  }
  SizedLinearSpace out;
  out.space = restrict_to_points(plane, points);
  out.q = q;
  for (const auto& line : out.space.lines) {
    out.max_line_size = std::max(out.max_line_size, line.size());
  }
  const auto degrees = point_degrees(out.space);
  out.max_point_degree = *std::max_element(degrees.begin(), degrees.end());
  return out;
}

Report validate_linear_space(const LinearSpace& ls) {
  const Vertex n = ls.points;
  std::vector<std::vector<std::uint32_t>> count(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < ls.lines.size(); ++i) {
    const auto& line = ls.lines[i];
    if (line.size() < 2) {
      return Report::fail("L2: line " + std::to_string(i) + " has " +
                          std::to_string(line.size()) + " point(s)");
    }
    for (std::size_t a = 0; a < line.size(); ++a) {
      if (line[a] >= n) {
        return Report::fail("line " + std::to_string(i) + " has out-of-range point " +
                            std::to_string(line[a]));
      }
      for (std::size_t b = a + 1; b < line.size(); ++b) {
        if (line[b] >= n || line[a] == line[b]) {
          return Report::fail("line " + std::to_string(i) + " repeats or exceeds a point");
        }
        ++count[std::min(line[a], line[b])][std::max(line[a], line[b])];
      }
    }
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (count[a][b] != 1) {
        return Report::fail("L1: points " + std::to_string(a) + " and " + std::to_string(b) +
                                " lie on " + std::to_string(count[a][b]) + " lines",
                            a, b);
      }
    }
  }
  return Report::ok();
}

std::vector<std::size_t> point_degrees(const LinearSpace& ls) {
  std::vector<std::size_t> deg(ls.points, 0);
  for (const auto& line : ls.lines) {
    for (Vertex p : line) ++deg.at(p);
  }
  return deg;
}

std::vector<CliqueCover> linear_space_cover_parts(const Graph& g, const LinearSpace& ls,
                                                  CoverStrategy inner, const Seed& seed) {
  if (ls.points != g.vertex_count()) {
    throw ParameterError("linear space has " + std::to_string(ls.points) +
                         " points but the graph has " + std::to_string(g.vertex_count()) +
                         " vertices");
  }
  std::vector<CliqueCover> parts;
  parts.reserve(ls.lines.size());
  for (std::size_t i = 0; i < ls.lines.size(); ++i) {
    const auto& line = ls.lines[i];
    CliqueCover local = greedy_cover(induced_subgraph(g, line), inner, seed.child(i));
    CliqueCover part{g.vertex_count(), {}};
    for (auto& clique : local.cliques) {
      for (auto& v : clique) v = line[v];
      std::sort(clique.begin(), clique.end());
      part.cliques.push_back(std::move(clique));
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

CliqueCover linear_space_cover(const Graph& g, const LinearSpace& ls, CoverStrategy inner,
                               const Seed& seed) {
  CliqueCover cover{g.vertex_count(), {}};
  for (auto& part : linear_space_cover_parts(g, ls, inner, seed)) {
    for (auto& c : part.cliques) cover.cliques.push_back(std::move(c));
  }
  return cover;
}

}  // namespace kneser
