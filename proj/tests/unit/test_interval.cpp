#include "ivagg/errors.hpp"
#include "ivagg/interval.hpp"
#include "ivagg/sampling.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace ivagg;

TEST_CASE("make_interval accepts lo < hi and rejects the rest")
{
  Interval const a = make_interval(2, 4);
  CHECK(a.lo() == 2);
  CHECK(a.hi() == 4);
  CHECK_THROWS_AS(make_interval(0, 0), InvalidInterval);
  CHECK_THROWS_AS(make_interval(5, 3), InvalidInterval);
  CHECK_THROWS_AS(make_interval(0, std::numeric_limits<double>::infinity()), InvalidInterval);
  CHECK_THROWS_AS(make_interval(std::nan(""), 1), InvalidInterval);
}

TEST_CASE("negative zero is normalized so equality is exact")
{
  Interval const a = make_interval(-0.0, 1);
  Interval const b = make_interval(0.0, 1);
  CHECK(a == b);
  CHECK_FALSE(std::signbit(a.lo()));
}

TEST_CASE("open-set membership is strict")
{
  Interval const a = make_interval(2, 4);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  CHECK_FALSE(a.contains(4));
}

TEST_CASE("subset")
{
  CHECK(subset(make_interval(2, 4), make_interval(1, 5)));
  CHECK_FALSE(subset(make_interval(1, 5), make_interval(2, 4)));
  CHECK(subset(make_interval(2, 4), make_interval(2, 4)));
}

TEST_CASE("between")
{
  CHECK(between(make_interval(1, 2), make_interval(3, 4), make_interval(5, 6)));
  CHECK_FALSE(between(make_interval(1, 2), make_interval(0, 4), make_interval(5, 6)));
  CHECK(between(make_interval(0, 3), make_interval(0, 3), make_interval(7, 9)));
}

TEST_CASE("scalar_between on reals and extended reals")
{
  CHECK(scalar_between(1.0, 2.0, 3.0));
  CHECK(scalar_between(3.0, 2.0, 1.0));
  CHECK_FALSE(scalar_between(1.0, 5.0, 3.0));

  auto const ninf = ExtendedBound::neg_inf();
  auto const pinf = ExtendedBound::pos_inf();
  auto const two  = ExtendedBound::finite(2);
  CHECK(scalar_between(ninf, two, pinf));
  CHECK(scalar_between(pinf, two, ninf));
  CHECK_FALSE(scalar_between(two, ninf, pinf));
  CHECK(scalar_between(ninf, ninf, two));
}

TEST_CASE("endpoint_distance")
{
  CHECK(endpoint_distance(make_interval(2, 4), make_interval(2, 4)) == 0);
  CHECK(endpoint_distance(make_interval(0, 1), make_interval(1, 3)) == 3);
  CHECK(endpoint_distance(make_interval(2, 4), make_interval(1, 6)) == 3);
}

TEST_CASE("extended bounds are totally ordered")
{
  auto const ninf = ExtendedBound::neg_inf();
  auto const pinf = ExtendedBound::pos_inf();
  CHECK(ninf < ExtendedBound::finite(-1e300));
  CHECK(ExtendedBound::finite(1e300) < pinf);
  CHECK(ExtendedBound::finite(1) < ExtendedBound::finite(2));
  CHECK(ninf == ExtendedBound::from_double(-HUGE_VAL));
  CHECK_THROWS(ExtendedBound::finite(HUGE_VAL));
  CHECK_THROWS(ExtendedBound::pos_inf().value());
}

TEST_CASE("extended intervals admit the degenerate phantoms")
{
  auto const ninf = ExtendedBound::neg_inf();
  auto const pinf = ExtendedBound::pos_inf();
  CHECK_NOTHROW(ExtendedInterval::make(ninf, ninf));
  CHECK_NOTHROW(ExtendedInterval::make(ninf, pinf));
  CHECK_NOTHROW(ExtendedInterval::make(pinf, pinf));
  CHECK_NOTHROW(ExtendedInterval::make(ExtendedBound::finite(5), pinf));
  CHECK_THROWS_AS(ExtendedInterval::make(pinf, ExtendedBound::finite(3)), InvalidInterval);
  CHECK_THROWS_AS(ExtendedInterval::make(ExtendedBound::finite(3), ninf), InvalidInterval);
  CHECK_THROWS_AS(ExtendedInterval::make(ExtendedBound::finite(3), ExtendedBound::finite(3)),
                  InvalidInterval);
}

TEST_CASE("ray predicates for degenerate phantoms")
{
  for (double x : {-1e9, 0.0, 1e9})
  {
    CHECK(meets_lower_ray(ExtendedInterval::bottom(), x));
    CHECK_FALSE(meets_upper_ray(ExtendedInterval::bottom(), x));
    CHECK_FALSE(meets_lower_ray(ExtendedInterval::top(), x));
    CHECK(meets_upper_ray(ExtendedInterval::top(), x));
    CHECK(meets_lower_ray(ExtendedInterval::whole(), x));
    CHECK(meets_upper_ray(ExtendedInterval::whole(), x));
  }
  auto const s = ExtendedInterval::from(make_interval(2, 4));
  CHECK(meets_lower_ray(s, 3));
  CHECK_FALSE(meets_lower_ray(s, 2));
  CHECK(meets_upper_ray(s, 3));
  CHECK_FALSE(meets_upper_ray(s, 4));
}

TEST_CASE("profile construction and replacement")
{
  CHECK_THROWS_AS(Profile::make(std::vector<Interval>{}), InvalidInterval);
  Profile const s = Profile::make({make_interval(0, 1), make_interval(2, 3)});
  Profile const t = s.with_agent(1, make_interval(5, 6));
  CHECK(t[0] == s[0]);
  CHECK(t[1] == make_interval(5, 6));
  CHECK_THROWS_AS(s.with_agent(2, make_interval(0, 1)), std::out_of_range);
}

TEST_CASE("betweenness and distance properties on sampled triples")
{
  Rng rng(20261014);
  for (int k = 0; k < 5000; ++k)
  {
    auto const flavor = static_cast<ProfileFlavor>(k % 3);
    Interval const r  = sample_interval(rng, flavor);
    Interval const s  = sample_interval(rng, flavor);
    Interval const t  = sample_interval(rng, flavor);
    CHECK(between(r, s, t) == between(t, s, r));
    CHECK(between(r, r, t));
    CHECK(between(r, t, t));
    CHECK(endpoint_distance(r, t) <= endpoint_distance(r, s) + endpoint_distance(s, t) + 1e-12);
    CHECK(endpoint_distance(r, s) == endpoint_distance(s, r));
    CHECK((endpoint_distance(r, s) == 0) == (r == s));
    CHECK((subset(r, s) && subset(s, r)) == (r == s));
  }
}
