#pragma once

#include "ivagg/interval.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ivagg {

enum class Direction
{
  Increasing,
  Decreasing
};

struct Breakpoint
{
  double x;
  double y;

  friend bool operator==(Breakpoint const &, Breakpoint const &) = default;
};

/// Strictly monotone piecewise-linear bijection of the real line.
///
/// Breakpoints have strictly increasing x and strictly monotone y in the
/// stated direction. Beyond the first and last breakpoint the map continues
/// linearly with the given tail slopes (magnitudes; the sign comes from the
/// direction). Omitted tail slopes default to the adjacent segment's slope.
class MonotoneMap
{
public:
  /// Throws std::invalid_argument on fewer than 2 breakpoints, unsorted x,
  /// y not monotone in the given direction, or non-positive tail slopes.
  static MonotoneMap make(std::vector<Breakpoint> breakpoints, Direction direction,
                          std::optional<double> left_slope  = std::nullopt,
                          std::optional<double> right_slope = std::nullopt);

  static MonotoneMap identity();
  /// x -> x + b, evaluated exactly as one floating-point addition.
  static MonotoneMap translation(double b);
  /// x -> factor * x for factor > 0.
  static MonotoneMap scaling(double factor);
  /// x -> -x.
  static MonotoneMap reflection();

  double operator()(double x) const noexcept;

  Direction                      direction() const noexcept { return direction_; }
  std::span<Breakpoint const>    breakpoints() const noexcept { return breakpoints_; }
  double                         left_slope() const noexcept { return left_slope_; }
  double                         right_slope() const noexcept { return right_slope_; }

  friend bool operator==(MonotoneMap const &a, MonotoneMap const &b) noexcept
  {
    return a.direction_ == b.direction_ && a.breakpoints_ == b.breakpoints_ &&
           a.left_slope_ == b.left_slope_ && a.right_slope_ == b.right_slope_;
  }

private:
  // y = anchor_y + (x - anchor_x) * slope on one linear piece.
  struct Piece
  {
    double anchor_x;
    double anchor_y;
    double slope;
  };

  MonotoneMap() = default;
  static MonotoneMap affine(double slope, double intercept);
  void build_pieces();

  std::vector<Breakpoint> breakpoints_;
  Direction               direction_   = Direction::Increasing;
  double                  left_slope_  = 1.0;
  double                  right_slope_ = 1.0;
  // pieces_[0] is the left tail, pieces_.back() the right tail.
  std::vector<Piece>      pieces_;
};

double apply_map(MonotoneMap const &phi, double x) noexcept;

/// Image of an open interval; endpoints swap for decreasing maps.
Interval apply_map_interval(MonotoneMap const &phi, Interval const &a);
Profile  apply_map_profile(MonotoneMap const &phi, Profile const &s);

MonotoneMap invert_map(MonotoneMap const &phi);

/// Random increasing map with a breakpoint at every anchor (deduplicated),
/// plus a few interior breakpoints; slopes are log-uniform in [e^-2, e^2].
/// Deterministic per seed.
MonotoneMap random_increasing_map(std::uint64_t seed, std::span<double const> anchors);
/// Reflection composed with random_increasing_map; breakpoints still cover the anchors.
MonotoneMap random_decreasing_map(std::uint64_t seed, std::span<double const> anchors);

}  // namespace ivagg
