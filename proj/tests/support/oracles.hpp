#pragma once

// Independent reference computations used only by tests. None of these go
// through the library's order-statistic code path.

#include "ivagg/interval.hpp"
#include "ivagg/rules.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace ivagg::oracle {

/// p-th lowest lower endpoint and q-th highest upper endpoint by counting:
/// the smallest x in the profile with #{lo <= x} >= p, and the largest y
/// with #{hi >= y} >= q.
inline std::pair<double, double> endpoint_by_counting(Profile const &s, std::size_t p, std::size_t q)
{
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (auto const &cand : s)
  {
    std::size_t below = 0, above = 0;
    for (auto const &a : s)
    {
      below += a.lo() <= cand.lo();
      above += a.hi() >= cand.hi();
    }
    if (below >= p)
    {
      lo = std::min(lo, cand.lo());
    }
    if (above >= q)
    {
      hi = std::max(hi, cand.hi());
    }
  }
  return {lo, hi};
}

/// Generalized median read off the set definition
///   med(Q) = { x : #{i : (-inf,x] meets Q_i} >= n+1 and #{i : [x,inf) meets Q_i} >= n+1 }
/// by scanning the cells between consecutive finite bounds. Returns the
/// infimum and supremum of the membership set, or nullopt when it is empty
/// or unbounded.
inline std::optional<std::pair<double, double>> median_by_counting(PhantomVector const &p,
                                                                   Profile const       &s)
{
  std::size_t const             n = s.size();
  std::vector<ExtendedInterval> q;
  for (auto const &a : s)
  {
    q.push_back(ExtendedInterval::from(a));
  }
  q.insert(q.end(), p.phantoms.begin(), p.phantoms.end());

  std::vector<double> cuts;
  for (auto const &e : q)
  {
    if (e.lo().is_finite())
    {
      cuts.push_back(e.lo().value());
    }
    if (e.hi().is_finite())
    {
      cuts.push_back(e.hi().value());
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto member = [&](double x) {
    std::size_t lower = 0, upper = 0;
    for (auto const &e : q)
    {
      lower += meets_lower_ray(e, x);
      upper += meets_upper_ray(e, x);
    }
    return lower >= n + 1 && upper >= n + 1;
  };

  // Probe one point inside every open cell; membership is constant there.
  std::vector<std::pair<double, double>> cells;
  cells.emplace_back(-std::numeric_limits<double>::infinity(), cuts.front());
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
  {
    cells.emplace_back(cuts[k], cuts[k + 1]);
  }
  cells.emplace_back(cuts.back(), std::numeric_limits<double>::infinity());

  std::optional<double> inf, sup;
  for (auto const &[a, b] : cells)
  {
    double probe;
    if (std::isinf(a))
    {
      probe = b - 1.0;
    }
    else if (std::isinf(b))
    {
      probe = a + 1.0;
    }
    else
    {
      probe = a + (b - a) / 2.0;
    }
    if (member(probe))
    {
      if (!inf)
      {
        inf = a;
      }
      sup = b;
    }
  }
  if (!inf || std::isinf(*inf) || std::isinf(*sup))
  {
    return std::nullopt;
  }
  return std::make_pair(*inf, *sup);
}

}  // namespace ivagg::oracle
