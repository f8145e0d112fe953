#include "kneser/representation.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "kneser/clique_cover.hpp"

namespace kneser {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kneser: return "kneser";
    case Mode::min: return "min";
    case Mode::max: return "max";
    case Mode::avg: return "avg";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  if (name == "kneser") return Mode::kneser;
  if (name == "min") return Mode::min;
  if (name == "max") return Mode::max;
  if (name == "avg") return Mode::avg;
  throw ParameterError("unknown mode '" + std::string(name) + "'");
}

SetRepresentation::SetRepresentation(std::size_t ground_size, std::vector<Bitset> sets)
    : ground_size_(ground_size), sets_(std::move(sets)) {
  for (std::size_t v = 0; v < sets_.size(); ++v) {
    if (sets_[v].size() != ground_size_) {
      throw ParameterError("set of vertex " + std::to_string(v) +
                           " is not over a ground set of size " + std::to_string(ground_size_));
    }
  }
}

SetRepresentation SetRepresentation::from_lists(std::size_t ground_size,
                                                const std::vector<std::vector<Element>>& sets) {
  std::vector<Bitset> bits;
  bits.reserve(sets.size());
  for (std::size_t v = 0; v < sets.size(); ++v) {
    Bitset b(ground_size);
    for (Element x : sets[v]) {
      if (x >= ground_size) {
        throw ParameterError("element " + std::to_string(x) + " of vertex " + std::to_string(v) +
                             " exceeds ground size " + std::to_string(ground_size));
      }
      b.set(x);
    }
    bits.push_back(std::move(b));
  }
  return SetRepresentation(ground_size, std::move(bits));
}

std::vector<Element> SetRepresentation::elements(Vertex v) const {
  std::vector<Element> out;
  sets_[v].for_each([&](std::size_t x) { out.push_back(static_cast<Element>(x)); });
  return out;
}

std::size_t SetRepresentation::union_size() const {
  Bitset all(ground_size_);
  for (const auto& s : sets_) all |= s;
  return all.count();
}

bool sets_related(const Bitset& a, const Bitset& b, Mode mode, std::size_t k) {
  switch (mode) {
    case Mode::kneser: return !a.intersects(b);
    case Mode::min: return std::min(a.count_minus(b), b.count_minus(a)) >= k;
    case Mode::max: return std::max(a.count_minus(b), b.count_minus(a)) >= k;
    case Mode::avg: return a.count_minus(b) + b.count_minus(a) >= 2 * k;
  }
  return false;
}

namespace {

void check_rank(std::size_t k) {
  if (k == 0) throw ParameterError("rank k must be at least 1");
}

/// Size and distinctness side conditions of Kneser representations.
Report kneser_conditions(const SetRepresentation& rep, std::size_t k) {
  const Vertex n = rep.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t size = rep.set(v).count();
    if (size != k) {
      return Report::fail("set of vertex " + std::to_string(v) + " has size " +
                              std::to_string(size) + ", expected " + std::to_string(k),
                          v, v);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rep.set(u) == rep.set(v)) {
        return Report::fail("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                " have identical sets",
                            u, v);
      }
    }
  }
  return Report::ok();
}

std::string describe_pair(const SetRepresentation& rep, Vertex u, Vertex v, Mode mode) {
  const std::size_t uv = rep.set(u).count_minus(rep.set(v));
  const std::size_t vu = rep.set(v).count_minus(rep.set(u));
  switch (mode) {
    case Mode::kneser:
      return "intersection size " + std::to_string(rep.set(u).count_and(rep.set(v)));
    case Mode::min: return "min difference " + std::to_string(std::min(uv, vu));
    case Mode::max: return "max difference " + std::to_string(std::max(uv, vu));
    case Mode::avg: return "symmetric difference " + std::to_string(uv + vu);
  }
  return {};
}

Graph induced_unchecked(const SetRepresentation& rep, Mode mode, std::size_t k) {
  const Vertex n = rep.vertex_count();
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (sets_related(rep.set(u), rep.set(v), mode, k)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

Graph induced_graph(const SetRepresentation& rep, Mode mode, std::size_t k) {
  check_rank(k);
  if (mode == Mode::kneser) {
    if (Report r = kneser_conditions(rep, k); !r.valid) throw RepresentationError(r.reason);
  }
  return induced_unchecked(rep, mode, k);
}

Report verify(const SetRepresentation& rep, const Graph& g, Mode mode, std::size_t k) {
  check_rank(k);
  if (rep.vertex_count() != g.vertex_count()) {
    throw ParameterError("representation has " + std::to_string(rep.vertex_count()) +
                         " vertices but the graph has " + std::to_string(g.vertex_count()));
  }
  if (mode == Mode::kneser) {
    if (Report r = kneser_conditions(rep, k); !r.valid) return r;
  }
  const Vertex n = rep.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool related = sets_related(rep.set(u), rep.set(v), mode, k);
      if (related != g.adjacent(u, v)) {
        return Report::fail("pair (" + std::to_string(u) + "," + std::to_string(v) + "): " +
                                describe_pair(rep, u, v, mode) + " with k=" + std::to_string(k) +
                                (g.adjacent(u, v) ? " but the edge is present"
                                                  : " but the edge is absent"),
                            u, v);
      }
    }
  }
  return Report::ok();
}

namespace {

/// Pads every set with fresh dummies up to `rank`, appending dummies after
/// the existing ground elements in vertex order.
SetRepresentation pad_with_dummies(const std::vector<std::vector<Element>>& base,
                                   std::size_t base_ground, std::size_t rank) {
  std::size_t ground = base_ground;
  for (const auto& s : base) ground += rank - s.size();
  std::vector<std::vector<Element>> padded = base;
  auto next = static_cast<Element>(base_ground);
  for (auto& s : padded) {
    while (s.size() < rank) s.push_back(next++);
  }
  return SetRepresentation::from_lists(ground, padded);
}

}  // namespace

RankedRepresentation co_star(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n == 0) throw ParameterError("co-star needs at least one vertex");
  std::vector<std::vector<Element>> base(n);
  Element next = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) {
        base[u].push_back(next);
        base[v].push_back(next);
        ++next;
      }
    }
  }
  for (auto& s : base) std::sort(s.begin(), s.end());
  const DegreeStats stats = degree_stats(g);
  std::size_t rank = 0;
  if (stats.min_degree + 1 == n) {
    rank = 1;
  } else if (stats.min_degree + 2 == n) {
    rank = 2;
  } else {
    rank = n - 1 - stats.min_degree;
  }
  return {pad_with_dummies(base, next, rank), rank};
}

RankedRepresentation kneser_from_cover(const Graph& g, const CliqueCover& cover) {
  if (Report r = validate_cover(g, cover); !r.valid) {
    throw ParameterError("invalid clique cover: " + r.reason);
  }
  const Vertex n = g.vertex_count();
  std::vector<std::vector<Element>> base(n);
  for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
    for (Vertex v : cover.cliques[i]) base[v].push_back(static_cast<Element>(i));
  }
  const std::size_t rank = thickness(cover) + 1;
  return {pad_with_dummies(base, cover.cliques.size(), rank), rank};
}

SetRepresentation kneser_canonical_representation(Vertex s, Vertex k) {
  const auto subsets = k_subsets(s, k);
  std::vector<std::vector<Element>> lists(subsets.begin(), subsets.end());
  return SetRepresentation::from_lists(s, lists);
}

namespace {

SetRepresentation without_element(const SetRepresentation& rep, std::size_t x) {
  std::vector<Bitset> sets = rep.sets();
  for (auto& s : sets) s.reset(x);
  return SetRepresentation(rep.ground_size(), std::move(sets));
}

SetRepresentation compact(const SetRepresentation& rep) {
  Bitset used(rep.ground_size());
  for (const auto& s : rep.sets()) used |= s;
  std::vector<Element> relabel(rep.ground_size(), 0);
  Element next = 0;
  used.for_each([&](std::size_t x) { relabel[x] = next++; });
  std::vector<Bitset> sets;
  for (const auto& s : rep.sets()) {
    Bitset b(next);
    s.for_each([&](std::size_t x) { b.set(relabel[x]); });
    sets.push_back(std::move(b));
  }
  return SetRepresentation(next, std::move(sets));
}

void check_difference_mode(Mode mode) {
  if (mode == Mode::kneser) {
    throw ParameterError("reduction applies to min, max and avg representations only");
  }
}

}  // namespace

SetRepresentation reduce(const SetRepresentation& rep, Mode mode, std::size_t k) {
  check_rank(k);
  check_difference_mode(mode);
  const Graph target = induced_unchecked(rep, mode, k);
  SetRepresentation current = compact(rep);
  std::size_t x = 0;
  while (x < current.ground_size()) {
    SetRepresentation trial = without_element(current, x);
    if (induced_unchecked(trial, mode, k) == target) {
      current = compact(trial);
      x = 0;
    } else {
      ++x;
    }
  }
  return current;
}

bool is_reduced(const SetRepresentation& rep, Mode mode, std::size_t k) {
  check_rank(k);
  check_difference_mode(mode);
  const Graph target = induced_unchecked(rep, mode, k);
  for (std::size_t x = 0; x < rep.ground_size(); ++x) {
    if (induced_unchecked(without_element(rep, x), mode, k) == target) return false;
  }
  return true;
}

AtomPartition atoms(const SetRepresentation& rep) {
  const Vertex n = rep.vertex_count();
  std::vector<Atom> out;
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (std::size_t x = 0; x < rep.ground_size(); ++x) {
    Bitset pattern(n);
    for (Vertex v = 0; v < n; ++v) {
      if (rep.set(v).test(x)) pattern.set(v);
    }
    if (pattern.none()) continue;
    auto [it, inserted] = index.try_emplace(pattern.words(), out.size());
    if (inserted) out.push_back(Atom{pattern, {}});
    out[it->second].elements.push_back(static_cast<Element>(x));
  }
  return AtomPartition{std::move(out)};
}

}  // namespace kneser
