#pragma once

#include "ivagg/interval.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace ivagg {

/// Seeded generator with portable derived draws (mt19937_64 output is fixed
/// by the standard, the distributions below are written out by hand).
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
    : engine_(seed)
  {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  /// Uniform on {0, ..., n-1}; n > 0.
  std::size_t index(std::size_t n);
  bool bernoulli(double p) { return uniform01() < p; }
  /// exp of a uniform draw on [log a, log b].
  double log_uniform(double a, double b);
  std::vector<std::size_t> permutation(std::size_t n);

private:
  std::mt19937_64 engine_;
};

/// splitmix64-style mixing of a master seed with two stream coordinates.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) noexcept;

enum class ProfileFlavor
{
  Uniform,    ///< endpoints uniform on [-10, 10]
  Clustered,  ///< endpoints drawn from a small shared pool, forcing ties
  Integer,    ///< integer endpoints in [-5, 5]
};

Interval sample_interval(Rng &rng, ProfileFlavor flavor);
/// Mixture of the three flavors, picked per profile.
Profile sample_profile(Rng &rng, std::size_t n);
Profile sample_profile(Rng &rng, std::size_t n, ProfileFlavor flavor);

}  // namespace ivagg
