#include "ivagg/interval.hpp"

#include "ivagg/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ivagg {

namespace {

std::string describe_pair(double lo, double hi)
{
  return "(" + std::to_string(lo) + ", " + std::to_string(hi) + ")";
}

int rank(ExtendedBound::Kind k) noexcept
{
  switch (k)
  {
  case ExtendedBound::Kind::NegInf:
    return 0;
  case ExtendedBound::Kind::Finite:
    return 1;
  case ExtendedBound::Kind::PosInf:
    return 2;
  }
  return 1;
}

}  // namespace

Interval Interval::make(double lo, double hi)
{
  if (!std::isfinite(lo) || !std::isfinite(hi))
  {
    throw InvalidInterval("interval endpoints must be finite: " + describe_pair(lo, hi));
  }
  if (lo == hi)
  {
    throw InvalidInterval("empty interval " + describe_pair(lo, hi));
  }
  if (lo > hi)
  {
    throw InvalidInterval("inverted endpoints " + describe_pair(lo, hi));
  }
  // + 0.0 maps -0.0 to +0.0 and leaves every other value unchanged.
  return Interval{lo + 0.0, hi + 0.0};
}

Interval make_interval(double lo, double hi)
{
  return Interval::make(lo, hi);
}

ExtendedBound ExtendedBound::finite(double x)
{
  if (!std::isfinite(x))
  {
    throw InvalidInterval("finite bound expected, got " + std::to_string(x));
  }
  return ExtendedBound{Kind::Finite, x + 0.0};
}

ExtendedBound ExtendedBound::from_double(double x)
{
  if (std::isnan(x))
  {
    throw InvalidInterval("NaN is not an extended real");
  }
  if (std::isinf(x))
  {
    return x < 0 ? neg_inf() : pos_inf();
  }
  return finite(x);
}

double ExtendedBound::value() const
{
  if (kind_ != Kind::Finite)
  {
    throw std::logic_error("ExtendedBound::value on an infinite bound");
  }
  return value_;
}

double ExtendedBound::as_double() const noexcept
{
  switch (kind_)
  {
  case Kind::NegInf:
    return -HUGE_VAL;
  case Kind::PosInf:
    return HUGE_VAL;
  case Kind::Finite:
    break;
  }
  return value_;
}

std::weak_ordering operator<=>(ExtendedBound const &a, ExtendedBound const &b) noexcept
{
  int const ra = rank(a.kind_);
  int const rb = rank(b.kind_);
  if (ra != rb)
  {
    return ra <=> rb;
  }
  if (a.kind_ != ExtendedBound::Kind::Finite || a.value_ == b.value_)
  {
    return std::weak_ordering::equivalent;
  }
  return a.value_ < b.value_ ? std::weak_ordering::less : std::weak_ordering::greater;
}

bool ext_precedes(ExtendedBound x, ExtendedBound y) noexcept
{
  if (x.kind() == ExtendedBound::Kind::NegInf || y.kind() == ExtendedBound::Kind::PosInf)
  {
    return true;
  }
  return x.is_finite() && y.is_finite() && x.value() < y.value();
}

ExtendedInterval ExtendedInterval::make(ExtendedBound lo, ExtendedBound hi)
{
  if (!ext_precedes(lo, hi))
  {
    throw InvalidInterval("invalid extended interval (" + std::to_string(lo.as_double()) + ", " +
                          std::to_string(hi.as_double()) + ")");
  }
  return ExtendedInterval{lo, hi};
}

ExtendedInterval ExtendedInterval::from(Interval const &s) noexcept
{
  return ExtendedInterval{ExtendedBound::finite(s.lo()), ExtendedBound::finite(s.hi())};
}

ExtendedInterval ExtendedInterval::bottom() noexcept
{
  return ExtendedInterval{ExtendedBound::neg_inf(), ExtendedBound::neg_inf()};
}

ExtendedInterval ExtendedInterval::whole() noexcept
{
  return ExtendedInterval{ExtendedBound::neg_inf(), ExtendedBound::pos_inf()};
}

ExtendedInterval ExtendedInterval::top() noexcept
{
  return ExtendedInterval{ExtendedBound::pos_inf(), ExtendedBound::pos_inf()};
}

bool meets_lower_ray(ExtendedInterval const &q, double x)
{
  return q.lo() < ExtendedBound::finite(x);
}

bool meets_upper_ray(ExtendedInterval const &q, double x)
{
  return q.hi() > ExtendedBound::finite(x);
}

Profile Profile::make(std::vector<Interval> agents)
{
  if (agents.empty())
  {
    throw InvalidInterval("a profile needs at least one agent");
  }
  return Profile{std::move(agents)};
}

Profile Profile::make(std::initializer_list<Interval> agents)
{
  return make(std::vector<Interval>(agents));
}

Profile Profile::with_agent(std::size_t i, Interval replacement) const
{
  if (i >= agents_.size())
  {
    throw std::out_of_range("agent index " + std::to_string(i) + " out of range for n = " +
                            std::to_string(agents_.size()));
  }
  Profile copy = *this;
  copy.agents_[i] = replacement;
  return copy;
}

std::vector<double> Profile::lower_endpoints() const
{
  std::vector<double> out;
  out.reserve(agents_.size());
  for (auto const &s : agents_)
  {
    out.push_back(s.lo());
  }
  return out;
}

std::vector<double> Profile::upper_endpoints() const
{
  std::vector<double> out;
  out.reserve(agents_.size());
  for (auto const &s : agents_)
  {
    out.push_back(s.hi());
  }
  return out;
}

bool subset(Interval const &a, Interval const &b) noexcept
{
  return b.lo() <= a.lo() && a.hi() <= b.hi();
}

bool scalar_between(double x, double z, double y) noexcept
{
  return (x <= z && z <= y) || (y <= z && z <= x);
}

bool scalar_between(ExtendedBound x, ExtendedBound z, ExtendedBound y) noexcept
{
  return (x <= z && z <= y) || (y <= z && z <= x);
}

bool between(Interval const &r, Interval const &s, Interval const &t) noexcept
{
  return scalar_between(r.lo(), s.lo(), t.lo()) && scalar_between(r.hi(), s.hi(), t.hi());
}

double endpoint_distance(Interval const &a, Interval const &b) noexcept
{
  return std::abs(a.lo() - b.lo()) + std::abs(a.hi() - b.hi());
}

Interval shift(Interval const &s, double b)
{
  return Interval::make(s.lo() + b, s.hi() + b);
}

Profile shift(Profile const &s, double b)
{
  std::vector<Interval> out;
  out.reserve(s.size());
  for (auto const &a : s)
  {
    out.push_back(shift(a, b));
  }
  return Profile::make(std::move(out));
}

}  // namespace ivagg
