#include "ivagg/sampling.hpp"
#include "ivagg/transforms.hpp"

#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

using namespace ivagg;

namespace {

MonotoneMap doubling()
{
  return MonotoneMap::make({{0, 0}, {1, 2}}, Direction::Increasing);
}

MonotoneMap reflection_bp()
{
  return MonotoneMap::make({{0, 0}, {1, -1}}, Direction::Decreasing);
}

}  // namespace

TEST_CASE("apply_map basics")
{
  CHECK(apply_map(MonotoneMap::make({{0, 0}, {1, 1}}, Direction::Increasing), 3.7) == doctest::Approx(3.7));
  CHECK(apply_map(MonotoneMap::identity(), 3.7) == 3.7);
  CHECK(apply_map(doubling(), 3) == 6);
  CHECK(apply_map(reflection_bp(), 2) == -2);
  CHECK(apply_map(MonotoneMap::reflection(), 2) == -2);
  CHECK(apply_map(MonotoneMap::translation(0.1), 0.2) == 0.1 + 0.2);
  CHECK(apply_map(MonotoneMap::scaling(3), 2) == 6);
}

TEST_CASE("piecewise map with explicit tails")
{
  auto const phi = MonotoneMap::make({{0, 0}, {1, 1}, {2, 10}}, Direction::Increasing, 0.5, 2.0);
  CHECK(phi(0.5) == doctest::Approx(0.5));
  CHECK(phi(1.5) == doctest::Approx(5.5));
  CHECK(phi(-2) == doctest::Approx(-1));
  CHECK(phi(3) == doctest::Approx(12));
  CHECK(phi(2) == doctest::Approx(10));

  // Default tails continue the adjacent segment.
  auto const psi = MonotoneMap::make({{0, 0}, {1, 1}, {2, 10}}, Direction::Increasing);
  CHECK(psi(-1) == doctest::Approx(-1));
  CHECK(psi(3) == doctest::Approx(19));
}

TEST_CASE("map construction is validated")
{
  CHECK_THROWS_AS(MonotoneMap::make({{0, 0}}, Direction::Increasing), std::invalid_argument);
  CHECK_THROWS_AS(MonotoneMap::make({{1, 0}, {0, 1}}, Direction::Increasing), std::invalid_argument);
  CHECK_THROWS_AS(MonotoneMap::make({{0, 0}, {1, 0}}, Direction::Increasing), std::invalid_argument);
  CHECK_THROWS_AS(MonotoneMap::make({{0, 0}, {1, 1}}, Direction::Decreasing), std::invalid_argument);
  CHECK_THROWS_AS(MonotoneMap::make({{0, 0}, {1, 1}}, Direction::Increasing, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(MonotoneMap::make({{0, 0}, {1, 1}}, Direction::Increasing, std::nullopt, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(MonotoneMap::make({{0, 0}, {NAN, 1}}, Direction::Increasing), std::invalid_argument);
  CHECK_THROWS_AS(MonotoneMap::scaling(0), std::invalid_argument);
}

TEST_CASE("apply_map_interval")
{
  CHECK(apply_map_interval(doubling(), make_interval(1, 6)) == make_interval(2, 12));
  CHECK(apply_map_interval(reflection_bp(), make_interval(1, 4)) == make_interval(-4, -1));
  CHECK(apply_map_interval(MonotoneMap::identity(), make_interval(2, 4)) == make_interval(2, 4));

  Profile const s  = Profile::make({make_interval(1, 2), make_interval(-3, 0)});
  Profile const fs = apply_map_profile(MonotoneMap::reflection(), s);
  CHECK(fs[0] == make_interval(-2, -1));
  CHECK(fs[1] == make_interval(0, 3));
}

TEST_CASE("invert_map")
{
  auto const halving = invert_map(doubling());
  CHECK(halving(6) == doctest::Approx(3));
  CHECK(halving.direction() == Direction::Increasing);

  auto const r = invert_map(MonotoneMap::reflection());
  CHECK(r(5) == -5);
  CHECK(r.direction() == Direction::Decreasing);
  CHECK(invert_map(reflection_bp())(-3) == doctest::Approx(3));
  CHECK(invert_map(MonotoneMap::identity())(1.25) == doctest::Approx(1.25));
}

TEST_CASE("random maps are monotone, hit their anchors and invert")
{
  Rng rng(21);
  for (std::uint64_t seed = 0; seed < 300; ++seed)
  {
    std::vector<double> anchors;
    std::size_t const   k = 1 + rng.index(8);
    for (std::size_t j = 0; j < k; ++j)
    {
      anchors.push_back(rng.uniform(-50, 50));
    }
    anchors.push_back(anchors.front());

    for (bool decreasing : {false, true})
    {
      MonotoneMap const phi = decreasing ? random_decreasing_map(seed, anchors) : random_increasing_map(seed, anchors);
      REQUIRE(phi.direction() == (decreasing ? Direction::Decreasing : Direction::Increasing));

      std::set<double> xs;
      for (auto const &b : phi.breakpoints())
      {
        xs.insert(b.x);
      }
      for (double a : anchors)
      {
        REQUIRE(xs.count(a) == 1);
      }

      MonotoneMap const inv = invert_map(phi);
      double            prev_x = -1e4;
      double            prev_y = phi(prev_x);
      for (int j = 1; j <= 400; ++j)
      {
        double const x = -1e4 + j * 50.0;
        double const y = phi(x);
        REQUIRE(std::isfinite(y));
        if (decreasing)
        {
          REQUIRE(y < prev_y);
        }
        else
        {
          REQUIRE(y > prev_y);
        }
        prev_x = x;
        prev_y = y;
      }
      for (int j = 0; j < 50; ++j)
      {
        double const x = rng.uniform(-200, 200);
        REQUIRE(std::abs(inv(phi(x)) - x) <= 1e-9 * std::max(1.0, std::abs(x)));
      }
    }
  }
}

TEST_CASE("random maps are deterministic per seed")
{
  std::vector<double> const anchors{0, 1};
  auto const                a = random_increasing_map(1, anchors);
  auto const                b = random_increasing_map(1, anchors);
  CHECK(a == b);

  auto gaps = [](MonotoneMap const &m) {
    std::vector<double> out;
    auto const          bps = m.breakpoints();
    for (std::size_t i = 0; i + 1 < bps.size(); ++i)
    {
      out.push_back(bps[i + 1].y - bps[i].y);
    }
    return out;
  };
  int differ = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed)
  {
    differ += gaps(random_increasing_map(seed, anchors)) != gaps(random_increasing_map(seed + 1000, anchors));
  }
  CHECK(differ == 100);
}

TEST_CASE("translation is exact")
{
  Rng rng(22);
  for (int k = 0; k < 2000; ++k)
  {
    double const b = rng.uniform(-100, 100);
    double const x = rng.uniform(-10, 10);
    REQUIRE(MonotoneMap::translation(b)(x) == x + b);
    REQUIRE(MonotoneMap::reflection()(x) == -x);
  }
}
