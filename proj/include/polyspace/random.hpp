#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace polyspace {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of trial `index` under run seed `seed`: mix64(seed ^ mix64(index)).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return mix64(seed ^ mix64(index)); }

/// std::mt19937_64 is fully specified by the standard, so streams are portable.
/// The distributions below avoid std::*_distribution, whose output is
/// implementation-defined.
using Rng = std::mt19937_64;

template <class G>
double uniform01(G& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

template <class G>
double uniform(G& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

/// Uniform integer in [0, n).
template <class G>
std::uint64_t uniform_index(G& g, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = g();
  } while (x >= limit);
  return x % n;
}

/// Standard normal via Box-Muller.
template <class G>
double normal(G& g) {
  double u1;
  do {
    u1 = uniform01(g);
  } while (u1 == 0.0);
  const double u2 = uniform01(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace polyspace
