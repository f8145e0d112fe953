#include "kneser/encoding.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace kneser {

namespace {

std::vector<Vertex> size_order(std::span<const Bitset> family) {
  std::vector<Vertex> order(family.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return family[a].count() < family[b].count();
  });
  return order;
}

}  // namespace

BipartiteEncoding encode_bipartite(std::span<const Bitset> left, std::span<const Bitset> right) {
  if (left.size() != right.size()) {
    throw ParameterError("bipartite encoding needs two families of equal length");
  }
  BipartiteEncoding enc;
  enc.n = static_cast<Vertex>(left.size());
  enc.ground_size = left.empty() ? 0 : left.front().size();
  for (const auto* family : {&left, &right}) {
    for (const auto& s : *family) {
      if (s.size() != enc.ground_size) {
        throw ParameterError("bipartite encoding needs a common ground set");
      }
    }
  }
  enc.left_order = size_order(left);
  enc.right_order = size_order(right);
  for (Vertex i = 0; i < enc.n; ++i) {
    enc.left_rows.push_back(left[enc.left_order[i]]);
    enc.right_rows.push_back(right[enc.right_order[i]]);
  }
  return enc;
}

BipartiteEncoding encode_bipartite(const SetRepresentation& rep) {
  if (rep.vertex_count() % 2 != 0) {
    throw ParameterError("a bipartite representation lists 2n sets");
  }
  const std::size_t n = rep.vertex_count() / 2;
  std::span<const Bitset> all(rep.sets());
  BipartiteEncoding enc = encode_bipartite(all.first(n), all.subspan(n));
  enc.ground_size = rep.ground_size();
  return enc;
}

namespace {

void check_permutation(const std::vector<Vertex>& perm, Vertex n, const char* name) {
  if (perm.size() != n) throw ParameterError(std::string(name) + " has the wrong length");
  std::vector<bool> seen(n, false);
  for (Vertex v : perm) {
    if (v >= n || seen[v]) throw ParameterError(std::string(name) + " is not a permutation");
    seen[v] = true;
  }
}

}  // namespace

BipartiteGraph decode_bipartite(const BipartiteEncoding& enc, std::size_t k) {
  if (k == 0) throw ParameterError("rank k must be at least 1");
  if (enc.left_rows.size() != enc.n || enc.right_rows.size() != enc.n) {
    throw ParameterError("encoding matrices must have n rows");
  }
  for (const auto* rows : {&enc.left_rows, &enc.right_rows}) {
    for (const auto& r : *rows) {
      if (r.size() != enc.ground_size) {
        throw ParameterError("encoding rows must have ground_size columns");
      }
    }
  }
  check_permutation(enc.left_order, enc.n, "left permutation");
  check_permutation(enc.right_order, enc.n, "right permutation");
  BipartiteGraph g(enc.n);
  for (Vertex i = 0; i < enc.n; ++i) {
    for (Vertex j = 0; j < enc.n; ++j) {
      if (sets_related(enc.left_rows[i], enc.right_rows[j], Mode::min, k)) {
        g.add_edge(enc.left_order[i], enc.right_order[j]);
      }
    }
  }
  return g;
}

bool rows_sorted_by_size(std::span<const Bitset> rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].count() > rows[i].count()) return false;
  }
  return true;
}

Report check_consecutive_differences(std::span<const Bitset> rows, std::size_t k) {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const std::size_t d = rows[i].count_minus(rows[i + 1]);
    if (d + 1 > k) {
      return Report::fail("rows " + std::to_string(i) + " and " + std::to_string(i + 1) +
                              " differ by " + std::to_string(d) + " >= k",
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1));
    }
  }
  return Report::ok();
}

ConfigurationCounts count_configurations(std::span<const Bitset> rows) {
  ConfigurationCounts c;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    c.one_zero += rows[i].count_minus(rows[i + 1]);
    c.zero_one += rows[i + 1].count_minus(rows[i]);
  }
  return c;
}

std::vector<Bitset> rebuild_from_configurations(std::span<const Bitset> rows) {
  if (rows.empty()) return {};
  std::vector<Bitset> out;
  out.push_back(rows.front());
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    Bitset one_zero = rows[i];
    one_zero.subtract(rows[i + 1]);
    Bitset zero_one = rows[i + 1];
    zero_one.subtract(rows[i]);
    Bitset next = out.back();
    next.subtract(one_zero);
    next |= zero_one;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace kneser
