#include "ivagg/transforms.hpp"

#include "ivagg/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ivagg {

namespace {

double signed_slope(Direction d, double magnitude) noexcept
{
  return d == Direction::Increasing ? magnitude : -magnitude;
}

}  // namespace

MonotoneMap MonotoneMap::make(std::vector<Breakpoint> breakpoints, Direction direction,
                              std::optional<double> left_slope, std::optional<double> right_slope)
{
  if (breakpoints.size() < 2)
  {
    throw std::invalid_argument("monotone map needs at least 2 breakpoints");
  }
  for (auto const &bp : breakpoints)
  {
    if (!std::isfinite(bp.x) || !std::isfinite(bp.y))
    {
      throw std::invalid_argument("monotone map breakpoints must be finite");
    }
  }
  for (std::size_t k = 1; k < breakpoints.size(); ++k)
  {
    auto const &a = breakpoints[k - 1];
    auto const &b = breakpoints[k];
    if (!(a.x < b.x))
    {
      throw std::invalid_argument("monotone map breakpoints need strictly increasing x");
    }
    bool const ok = direction == Direction::Increasing ? a.y < b.y : a.y > b.y;
    if (!ok)
    {
      throw std::invalid_argument("monotone map breakpoints are not strictly monotone in y");
    }
  }
  auto segment_slope = [&](std::size_t k) {
    auto const &a = breakpoints[k];
    auto const &b = breakpoints[k + 1];
    return std::abs((b.y - a.y) / (b.x - a.x));
  };
  double const left  = left_slope.value_or(segment_slope(0));
  double const right = right_slope.value_or(segment_slope(breakpoints.size() - 2));
  if (!(left > 0) || !(right > 0) || !std::isfinite(left) || !std::isfinite(right))
  {
    throw std::invalid_argument("monotone map tail slopes must be positive and finite");
  }

  MonotoneMap m;
  m.breakpoints_ = std::move(breakpoints);
  m.direction_   = direction;
  m.left_slope_  = left;
  m.right_slope_ = right;
  m.build_pieces();
  return m;
}

void MonotoneMap::build_pieces()
{
  pieces_.clear();
  pieces_.reserve(breakpoints_.size() + 1);
  auto const &first = breakpoints_.front();
  pieces_.push_back({first.x, first.y, signed_slope(direction_, left_slope_)});
  for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k)
  {
    auto const &a = breakpoints_[k];
    auto const &b = breakpoints_[k + 1];
    pieces_.push_back({a.x, a.y, (b.y - a.y) / (b.x - a.x)});
  }
  auto const &last = breakpoints_.back();
  pieces_.push_back({last.x, last.y, signed_slope(direction_, right_slope_)});
}

// Every piece is the same line anchored at the origin, so evaluation is
// intercept + x * slope with no rounding beyond those two operations.
MonotoneMap MonotoneMap::affine(double slope, double intercept)
{
  Direction const d = slope > 0 ? Direction::Increasing : Direction::Decreasing;
  MonotoneMap     m = make({{0.0, intercept}, {1.0, intercept + slope}}, d, std::abs(slope),
                           std::abs(slope));
  for (auto &piece : m.pieces_)
  {
    piece = {0.0, intercept, slope};
  }
  return m;
}

MonotoneMap MonotoneMap::identity()
{
  return affine(1.0, 0.0);
}

MonotoneMap MonotoneMap::translation(double b)
{
  return affine(1.0, b);
}

MonotoneMap MonotoneMap::scaling(double factor)
{
  if (!(factor > 0))
  {
    throw std::invalid_argument("scaling factor must be positive");
  }
  return affine(factor, 0.0);
}

MonotoneMap MonotoneMap::reflection()
{
  return affine(-1.0, 0.0);
}

double MonotoneMap::operator()(double x) const noexcept
{
  // Number of breakpoints with bp.x <= x selects the piece; a breakpoint
  // hit exactly returns its own y.
  auto const it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x,
                                   [](double v, Breakpoint const &bp) { return v < bp.x; });
  auto const  idx   = static_cast<std::size_t>(it - breakpoints_.begin());
  Piece const &piece = idx == breakpoints_.size() ? pieces_.back() : pieces_[idx];
  return piece.anchor_y + (x - piece.anchor_x) * piece.slope;
}

double apply_map(MonotoneMap const &phi, double x) noexcept
{
  return phi(x);
}

Interval apply_map_interval(MonotoneMap const &phi, Interval const &a)
{
  double const lo = phi(a.lo());
  double const hi = phi(a.hi());
  return phi.direction() == Direction::Increasing ? Interval::make(lo, hi) : Interval::make(hi, lo);
}

Profile apply_map_profile(MonotoneMap const &phi, Profile const &s)
{
  std::vector<Interval> out;
  out.reserve(s.size());
  for (auto const &a : s)
  {
    out.push_back(apply_map_interval(phi, a));
  }
  return Profile::make(std::move(out));
}

MonotoneMap invert_map(MonotoneMap const &phi)
{
  std::vector<Breakpoint> swapped;
  swapped.reserve(phi.breakpoints().size());
  for (auto const &bp : phi.breakpoints())
  {
    swapped.push_back({bp.y, bp.x});
  }
  if (phi.direction() == Direction::Increasing)
  {
    return MonotoneMap::make(std::move(swapped), Direction::Increasing, 1.0 / phi.left_slope(),
                             1.0 / phi.right_slope());
  }
  std::reverse(swapped.begin(), swapped.end());
  // y -> -inf comes from x -> +inf, so the tails trade places.
  return MonotoneMap::make(std::move(swapped), Direction::Decreasing, 1.0 / phi.right_slope(),
                           1.0 / phi.left_slope());
}

MonotoneMap random_increasing_map(std::uint64_t seed, std::span<double const> anchors)
{
  Rng rng(seed);

  std::vector<double> xs;
  for (double a : anchors)
  {
    if (!std::isfinite(a))
    {
      throw std::invalid_argument("map anchors must be finite");
    }
    xs.push_back(a + 0.0);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.empty())
  {
    xs = {0.0, 1.0};
  }
  else if (xs.size() == 1)
  {
    xs.push_back(xs.front() + 1.0);
  }

  std::vector<double> grid;
  grid.push_back(xs.front() - rng.uniform(0.5, 3.0));
  for (std::size_t k = 0; k < xs.size(); ++k)
  {
    grid.push_back(xs[k]);
    if (k + 1 < xs.size() && rng.bernoulli(0.5))
    {
      double const mid = rng.uniform(xs[k], xs[k + 1]);
      if (xs[k] < mid && mid < xs[k + 1])
      {
        grid.push_back(mid);
      }
    }
  }
  grid.push_back(xs.back() + rng.uniform(0.5, 3.0));

  constexpr double kSlopeLo = 0.1353352832366127;  // e^-2
  constexpr double kSlopeHi = 7.38905609893065;    // e^2

  std::vector<Breakpoint> bps;
  bps.reserve(grid.size());
  double y = grid.front() + rng.uniform(-5.0, 5.0);
  bps.push_back({grid.front(), y});
  for (std::size_t k = 1; k < grid.size(); ++k)
  {
    double next = y + (grid[k] - grid[k - 1]) * rng.log_uniform(kSlopeLo, kSlopeHi);
    if (!(next > y))
    {
      next = std::nextafter(y, HUGE_VAL);
    }
    y = next;
    bps.push_back({grid[k], y});
  }
  double const left  = rng.log_uniform(kSlopeLo, kSlopeHi);
  double const right = rng.log_uniform(kSlopeLo, kSlopeHi);
  return MonotoneMap::make(std::move(bps), Direction::Increasing, left, right);
}

MonotoneMap random_decreasing_map(std::uint64_t seed, std::span<double const> anchors)
{
  std::vector<double> reflected(anchors.begin(), anchors.end());
  for (double &a : reflected)
  {
    a = -a;
  }
  MonotoneMap const psi = random_increasing_map(seed, reflected);

  // phi(x) = psi(-x)
  std::vector<Breakpoint> bps;
  for (auto const &bp : psi.breakpoints())
  {
    bps.push_back({-bp.x + 0.0, bp.y});
  }
  std::reverse(bps.begin(), bps.end());
  return MonotoneMap::make(std::move(bps), Direction::Decreasing, psi.right_slope(), psi.left_slope());
}

}  // namespace ivagg
