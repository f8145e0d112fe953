#pragma once

// Random set representations for property tests and the acceptance run.

#include <algorithm>
#include <optional>
#include <vector>

#include "kneser/random.hpp"
#include "kneser/representation.hpp"

namespace gen {

using kneser::Bitset;
using kneser::Rng;
using kneser::SetRepresentation;
using kneser::Vertex;

/// n sets over a ground set of size s, each element present with prob. density.
inline SetRepresentation random_rep(Rng& rng, Vertex n, std::size_t s, double density) {
  std::vector<Bitset> sets(n, Bitset(s));
  for (auto& b : sets) {
    for (std::size_t x = 0; x < s; ++x) b.assign(x, rng.bernoulli(density));
  }
  return SetRepresentation(s, std::move(sets));
}

/// min(|a\b|, |b\a|), computed from index lists.
inline std::size_t min_difference(const Bitset& a, const Bitset& b) {
  const auto ia = a.to_indices(), ib = b.to_indices();
  std::vector<std::size_t> ab, ba;
  std::set_difference(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(ab));
  std::set_difference(ib.begin(), ib.end(), ia.begin(), ia.end(), std::back_inserter(ba));
  return std::min(ab.size(), ba.size());
}

/// A side of n sets that is independent under k-min-difference: a random
/// nested chain with a few elements toggled, kept only if every pair still
/// has min difference below k.
inline std::vector<Bitset> independent_side(Rng& rng, Vertex n, std::size_t s, std::size_t k) {
  while (true) {
    std::vector<std::size_t> order(s);
    for (std::size_t i = 0; i < s; ++i) order[i] = i;
    rng.shuffle(order);
    std::vector<Bitset> side;
    Bitset cur(s);
    std::size_t pos = 0;
    for (Vertex i = 0; i < n; ++i) {
      const std::size_t grow = rng.below(3);
      for (std::size_t g = 0; g < grow && pos < s; ++g) cur.set(order[pos++]);
      Bitset b = cur;
      for (std::size_t t = rng.below(k + 1); t > 0; --t) {
        const std::size_t x = rng.below(s);
        b.assign(x, !b.test(x));
      }
      side.push_back(b);
    }
    bool ok = true;
    for (Vertex i = 0; i < n && ok; ++i) {
      for (Vertex j = i + 1; j < n && ok; ++j) ok = min_difference(side[i], side[j]) < k;
    }
    if (ok) return side;
  }
}

/// Representation of a bipartite graph on 2n vertices (left i = i, right
/// j = n + j) under k-min-difference, sides drawn by independent_side.
inline SetRepresentation random_bipartite_rep(Rng& rng, Vertex n, std::size_t s, std::size_t k) {
  auto sets = independent_side(rng, n, s, k);
  auto right = independent_side(rng, n, s, k);
  sets.insert(sets.end(), right.begin(), right.end());
  return SetRepresentation(s, std::move(sets));
}

}  // namespace gen
