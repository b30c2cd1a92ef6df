#include "ivagg/sampling.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace ivagg {

std::size_t Rng::index(std::size_t n)
{
  std::uint64_t const bound = static_cast<std::uint64_t>(n);
  std::uint64_t const limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do
  {
    v = next();
  } while (v >= limit);
  return static_cast<std::size_t>(v % bound);
}

double Rng::log_uniform(double a, double b)
{
  return std::exp(uniform(std::log(a), std::log(b)));
}

std::vector<std::size_t> Rng::permutation(std::size_t n)
{
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i)
  {
    std::swap(out[i - 1], out[index(i)]);
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) noexcept
{
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(master) ^ stream) ^ index);
}

namespace {

// Shared pool for clustered profiles; small so that ties are frequent.
constexpr double kPool[] = {-3.0, -1.5, 0.0, 0.5, 2.0, 2.25, 4.0, 7.5};
constexpr std::size_t kPoolSize = sizeof(kPool) / sizeof(kPool[0]);

}  // namespace

Interval sample_interval(Rng &rng, ProfileFlavor flavor)
{
  switch (flavor)
  {
  case ProfileFlavor::Uniform:
  {
    double a, b;
    do
    {
      a = rng.uniform(-10.0, 10.0);
      b = rng.uniform(-10.0, 10.0);
    } while (a == b);
    return Interval::make(std::min(a, b), std::max(a, b));
  }
  case ProfileFlavor::Clustered:
  {
    std::size_t i, j;
    do
    {
      i = rng.index(kPoolSize);
      j = rng.index(kPoolSize);
    } while (i == j);
    return Interval::make(kPool[std::min(i, j)], kPool[std::max(i, j)]);
  }
  case ProfileFlavor::Integer:
  {
    long a, b;
    do
    {
      a = static_cast<long>(rng.index(11)) - 5;
      b = static_cast<long>(rng.index(11)) - 5;
    } while (a == b);
    return Interval::make(static_cast<double>(std::min(a, b)), static_cast<double>(std::max(a, b)));
  }
  }
  return Interval::make(0.0, 1.0);
}

Profile sample_profile(Rng &rng, std::size_t n, ProfileFlavor flavor)
{
  std::vector<Interval> agents;
  agents.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    agents.push_back(sample_interval(rng, flavor));
  }
  return Profile::make(std::move(agents));
}

Profile sample_profile(Rng &rng, std::size_t n)
{
  auto const flavor = static_cast<ProfileFlavor>(rng.index(3));
  return sample_profile(rng, n, flavor);
}

}  // namespace ivagg
