#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace kneser {

/// Reproducible seed: a master value plus a derivation path naming a
/// sub-stream. The same (master, path) yields the same stream everywhere.
///
/// Derivation: h = mix(master); for each path item x, h = mix(h ^ mix(x + φ)),
/// where mix is the SplitMix64 finalizer and φ = 0x9e3779b97f4a7c15. The
/// resulting 64-bit value seeds a std::mt19937_64, whose output sequence is
/// fixed by the C++ standard.
struct Seed {
  std::uint64_t master = 0;
  std::vector<std::uint64_t> path;

  Seed() = default;
  explicit Seed(std::uint64_t m) : master(m) {}
  Seed(std::uint64_t m, std::vector<std::uint64_t> p) : master(m), path(std::move(p)) {}

  Seed child(std::uint64_t item) const {
    Seed s = *this;
    s.path.push_back(item);
    return s;
  }
  Seed child(std::string_view label) const;

  std::uint64_t derive() const;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Stable 64-bit FNV-1a hash, used to turn labels into path items.
std::uint64_t stable_hash(std::string_view s);

std::uint64_t splitmix64(std::uint64_t x);

/// Platform-independent random stream. Only the raw engine output is used;
/// all derived quantities are computed here rather than through
/// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(const Seed& seed) : engine_(seed.derive()) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// True with probability p; exact for p == 0 and p == 1.
  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kneser
