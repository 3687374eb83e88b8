// Apache License, Version 2.0, refer to LICENSE.txt

#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace stochcond {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stateless counter-based draw: the index-th 64-bit word of stream `key`.
constexpr std::uint64_t counter_hash(std::uint64_t key, std::uint64_t index) {
  return mix64(key + (index + 1) * kGoldenGamma);
}

// Maps 64 random bits to a double in the open interval (0, 1).
constexpr double to_unit_open(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

// Counter-based, splittable random source. Satisfies
// UniformRandomBitGenerator so the <random> distributions can draw from it.
//
// Splitting rule: child(stream) has key mix64(key ^ mix64(stream + gamma)),
// so chain c of a run seeded with s uses RandomSource(s).split(c). Children
// are independent of the parent's counter, which makes parallel loops that
// split per item deterministic regardless of scheduling.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), key_(mix64(seed ^ kGoldenGamma)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return counter_hash(key_, counter_++); }

  double uniform() { return to_unit_open((*this)()); }

  double normal() {
    std::normal_distribution<double> dist(0.0, 1.0);
    return dist(*this);
  }

  std::size_t index(std::size_t n) {
    std::uniform_int_distribution<std::size_t> dist(0, n - 1);
    return dist(*this);
  }

  RandomSource split(std::uint64_t stream) const {
    return RandomSource(mix64(key_ ^ mix64(stream + kGoldenGamma)));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace stochcond
