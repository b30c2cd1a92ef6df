#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ivagg {

/// Bounded open nonempty interval (lo, hi) of the real line.
///
/// Endpoints are finite doubles with lo < hi. Construction normalizes -0.0 to
/// +0.0 so that equality is plain bit-exact comparison of both endpoints.
class Interval
{
public:
  /// Throws InvalidInterval unless lo < hi and both are finite.
  static Interval make(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  /// Open-set membership: lo < x < hi.
  bool contains(double x) const noexcept { return lo_ < x && x < hi_; }

  friend bool operator==(Interval const &, Interval const &) = default;

  /// Lexicographic on (lo, hi); used for deterministic tie-breaking.
  friend bool lex_less(Interval const &a, Interval const &b) noexcept
  {
    return a.lo_ < b.lo_ || (a.lo_ == b.lo_ && a.hi_ < b.hi_);
  }

private:
  Interval(double lo, double hi) noexcept
    : lo_(lo)
    , hi_(hi)
  {}

  double lo_;
  double hi_;
};

Interval make_interval(double lo, double hi);

/// Point of the extended reals: -inf, a finite double, or +inf.
class ExtendedBound
{
public:
  enum class Kind
  {
    NegInf,
    Finite,
    PosInf
  };

  static constexpr ExtendedBound neg_inf() noexcept { return ExtendedBound{Kind::NegInf, 0.0}; }
  static constexpr ExtendedBound pos_inf() noexcept { return ExtendedBound{Kind::PosInf, 0.0}; }
  /// Throws InvalidInterval for NaN or infinite input; use neg_inf()/pos_inf() for those.
  static ExtendedBound finite(double x);
  /// Maps -inf/+inf to the infinite kinds; throws on NaN.
  static ExtendedBound from_double(double x);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  /// Throws std::logic_error when not finite.
  double value() const;
  /// Finite value, or -/+infinity as a double.
  double as_double() const noexcept;

  friend bool operator==(ExtendedBound const &, ExtendedBound const &) = default;
  friend std::weak_ordering operator<=>(ExtendedBound const &a, ExtendedBound const &b) noexcept;

private:
  constexpr ExtendedBound(Kind kind, double value) noexcept
    : kind_(kind)
    , value_(value)
  {}

  Kind   kind_;
  double value_;
};

/// The strict relation used to form extended intervals: x < y on finite
/// values, and always true when x = -inf or y = +inf.
bool ext_precedes(ExtendedBound x, ExtendedBound y) noexcept;

/// Interval over the extended reals. (-inf,-inf), (-inf,inf) and (inf,inf)
/// are valid; they act as phantom intervals in the generalized median.
class ExtendedInterval
{
public:
  /// Throws InvalidInterval unless ext_precedes(lo, hi).
  static ExtendedInterval make(ExtendedBound lo, ExtendedBound hi);
  static ExtendedInterval from(Interval const &s) noexcept;

  static ExtendedInterval bottom() noexcept;  ///< (-inf, -inf)
  static ExtendedInterval whole() noexcept;   ///< (-inf, inf)
  static ExtendedInterval top() noexcept;     ///< (inf, inf)

  ExtendedBound lo() const noexcept { return lo_; }
  ExtendedBound hi() const noexcept { return hi_; }

  friend bool operator==(ExtendedInterval const &, ExtendedInterval const &) = default;

private:
  ExtendedInterval(ExtendedBound lo, ExtendedBound hi) noexcept
    : lo_(lo)
    , hi_(hi)
  {}

  ExtendedBound lo_;
  ExtendedBound hi_;
};

// Ray predicates for open (extended) intervals. (-inf,-inf) meets every
// lower ray and no upper ray; (inf,inf) the reverse; (-inf,inf) meets both.

/// (-inf, x] intersects q  <=>  lo < x.
bool meets_lower_ray(ExtendedInterval const &q, double x);
/// [x, +inf) intersects q  <=>  hi > x.
bool meets_upper_ray(ExtendedInterval const &q, double x);

/// Ordered list of n >= 1 individual intervals.
class Profile
{
public:
  /// Throws InvalidInterval when empty.
  static Profile make(std::vector<Interval> agents);
  static Profile make(std::initializer_list<Interval> agents);

  std::size_t size() const noexcept { return agents_.size(); }
  Interval const &operator[](std::size_t i) const noexcept { return agents_[i]; }
  /// Throws std::out_of_range.
  Interval const &at(std::size_t i) const { return agents_.at(i); }
  std::span<Interval const> agents() const noexcept { return agents_; }

  auto begin() const noexcept { return agents_.begin(); }
  auto end() const noexcept { return agents_.end(); }

  /// Copy with agent i's interval replaced; throws std::out_of_range.
  Profile with_agent(std::size_t i, Interval replacement) const;

  std::vector<double> lower_endpoints() const;
  std::vector<double> upper_endpoints() const;

  friend bool operator==(Profile const &, Profile const &) = default;

private:
  explicit Profile(std::vector<Interval> agents)
    : agents_(std::move(agents))
  {}

  std::vector<Interval> agents_;
};

/// a is contained in b.
bool subset(Interval const &a, Interval const &b) noexcept;

/// s lies between r and t: each endpoint of s is weakly between the
/// corresponding endpoints of r and t.
bool between(Interval const &r, Interval const &s, Interval const &t) noexcept;

/// z lies weakly between x and y (in either order).
bool scalar_between(double x, double z, double y) noexcept;
bool scalar_between(ExtendedBound x, ExtendedBound z, ExtendedBound y) noexcept;

/// L1 distance between endpoint pairs: |a.lo - b.lo| + |a.hi - b.hi|.
double endpoint_distance(Interval const &a, Interval const &b) noexcept;

/// [S + b]: every interval shifted by b.
Interval shift(Interval const &s, double b);
Profile  shift(Profile const &s, double b);

}  // namespace ivagg
