#include "kneser/random.hpp"

namespace kneser {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stable_hash(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Seed Seed::child(std::string_view label) const { return child(stable_hash(label)); }

std::uint64_t Seed::derive() const {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t item : path) h = splitmix64(h ^ splitmix64(item + kGolden));
  return h;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // 2^64 mod bound; rejecting values below it leaves every residue equally likely.
  const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
  std::uint64_t x = next();
  while (x < threshold) x = next();
  return x % bound;
}

}  // namespace kneser
