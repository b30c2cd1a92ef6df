#include "ivagg/rules.hpp"

#include "ivagg/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace ivagg {

namespace {

void require_size(EndpointRuleParams const &params, Profile const &s)
{
  if (s.size() != params.n())
  {
    throw RuleParameterError("endpoint rule f^{" + std::to_string(params.p()) + "," +
                             std::to_string(params.q()) + "} is defined for n = " +
                             std::to_string(params.n()) + ", got a profile of size " +
                             std::to_string(s.size()));
  }
}

// k is 1-indexed; values is consumed.
template <typename T, typename Compare = std::less<>>
T kth(std::vector<T> values, std::size_t k, Compare cmp = {})
{
  auto nth = values.begin() + static_cast<std::ptrdiff_t>(k - 1);
  std::nth_element(values.begin(), nth, values.end(), cmp);
  return *nth;
}

// Mean anchored at the first value so that constant inputs come back exactly.
// Summed in sorted order so the result does not depend on agent order.
double anchored_mean(std::vector<double> xs)
{
  std::sort(xs.begin(), xs.end());
  double const anchor = xs.front();
  double       acc    = 0.0;
  for (double x : xs)
  {
    acc += x - anchor;
  }
  return anchor + acc / static_cast<double>(xs.size());
}

}  // namespace

EndpointRuleParams EndpointRuleParams::make(std::size_t p, std::size_t q, std::size_t n)
{
  if (n == 0)
  {
    throw RuleParameterError("endpoint rule needs n >= 1");
  }
  if (p < 1 || q < 1)
  {
    throw RuleParameterError("endpoint rule quotas must be positive, got p = " +
                             std::to_string(p) + ", q = " + std::to_string(q));
  }
  if (p + q > n + 1)
  {
    throw RuleParameterError("endpoint rule needs p + q <= n + 1, got p = " + std::to_string(p) +
                             ", q = " + std::to_string(q) + ", n = " + std::to_string(n));
  }
  return EndpointRuleParams{p, q, n};
}

std::vector<EndpointRuleParams> all_endpoint_params(std::size_t n)
{
  std::vector<EndpointRuleParams> out;
  for (std::size_t p = 1; p <= n; ++p)
  {
    for (std::size_t q = 1; p + q <= n + 1; ++q)
    {
      out.push_back(EndpointRuleParams::make(p, q, n));
    }
  }
  return out;
}

Interval endpoint_rule(EndpointRuleParams const &params, Profile const &s)
{
  require_size(params, s);
  double const lo = kth(s.lower_endpoints(), params.p());
  double const hi = kth(s.upper_endpoints(), params.q(), std::greater<>{});
  return Interval::make(lo, hi);
}

std::size_t median_quota(std::size_t n) noexcept
{
  return (n + 1) / 2;
}

Interval median_rule(Profile const &s)
{
  std::size_t const m = median_quota(s.size());
  return endpoint_rule(EndpointRuleParams::make(m, m, s.size()), s);
}

Interval maximal_rule(Profile const &s)
{
  return endpoint_rule(EndpointRuleParams::make(1, 1, s.size()), s);
}

Interval averaging_rule(Profile const &s)
{
  return Interval::make(anchored_mean(s.lower_endpoints()), anchored_mean(s.upper_endpoints()));
}

std::string_view describe(PhantomDefect defect) noexcept
{
  switch (defect)
  {
  case PhantomDefect::WrongLength:
    return "phantom vector must have exactly n + 1 entries";
  case PhantomDefect::TooManyUnboundedBelow:
    return "more than n phantoms have lower bound -inf (median lower bound would be -inf)";
  case PhantomDefect::TooManyUnboundedAbove:
    return "more than n phantoms have upper bound inf (median upper bound would be inf)";
  case PhantomDefect::TooManyAtPosInf:
    return "more than n phantoms are (inf, inf) (median lower bound would be inf)";
  case PhantomDefect::TooManyAtNegInf:
    return "more than n phantoms are (-inf, -inf) (median upper bound would be -inf)";
  }
  return "unknown phantom defect";
}

std::optional<PhantomDefect> validate_phantoms(PhantomVector const &phantoms, std::size_t n)
{
  if (phantoms.phantoms.size() != n + 1)
  {
    return PhantomDefect::WrongLength;
  }
  std::size_t neg_lo = 0, pos_hi = 0, at_pos = 0, at_neg = 0;
  for (auto const &ph : phantoms.phantoms)
  {
    bool const lo_neg = ph.lo().kind() == ExtendedBound::Kind::NegInf;
    bool const lo_pos = ph.lo().kind() == ExtendedBound::Kind::PosInf;
    bool const hi_neg = ph.hi().kind() == ExtendedBound::Kind::NegInf;
    bool const hi_pos = ph.hi().kind() == ExtendedBound::Kind::PosInf;
    neg_lo += lo_neg;
    pos_hi += hi_pos;
    at_pos += lo_pos;  // lo = inf forces hi = inf
    at_neg += hi_neg;  // hi = -inf forces lo = -inf
  }
  if (neg_lo > n)
  {
    return PhantomDefect::TooManyUnboundedBelow;
  }
  if (pos_hi > n)
  {
    return PhantomDefect::TooManyUnboundedAbove;
  }
  if (at_pos > n)
  {
    return PhantomDefect::TooManyAtPosInf;
  }
  if (at_neg > n)
  {
    return PhantomDefect::TooManyAtNegInf;
  }
  return std::nullopt;
}

Interval generalized_median(PhantomVector const &phantoms, Profile const &s)
{
  std::size_t const n = s.size();
  if (auto defect = validate_phantoms(phantoms, n))
  {
    throw RuleParameterError(std::string("invalid phantom vector for n = ") + std::to_string(n) +
                             ": " + std::string(describe(*defect)));
  }
  std::vector<ExtendedBound> lows, highs;
  lows.reserve(2 * n + 1);
  highs.reserve(2 * n + 1);
  for (auto const &a : s)
  {
    lows.push_back(ExtendedBound::finite(a.lo()));
    highs.push_back(ExtendedBound::finite(a.hi()));
  }
  for (auto const &ph : phantoms.phantoms)
  {
    lows.push_back(ph.lo());
    highs.push_back(ph.hi());
  }
  // With 2n+1 values the (n+1)-th largest is also the (n+1)-th smallest.
  ExtendedBound const lo = kth(std::move(lows), n + 1);
  ExtendedBound const hi = kth(std::move(highs), n + 1);
  return Interval::make(lo.value(), hi.value());
}

PhantomVector endpoint_rule_phantoms(std::size_t p, std::size_t q, std::size_t n)
{
  auto const params = EndpointRuleParams::make(p, q, n);
  PhantomVector out;
  out.phantoms.reserve(n + 1);
  out.phantoms.insert(out.phantoms.end(), params.p(), ExtendedInterval::top());
  out.phantoms.insert(out.phantoms.end(), params.q(), ExtendedInterval::bottom());
  out.phantoms.insert(out.phantoms.end(), n + 1 - p - q, ExtendedInterval::whole());
  return out;
}

RuleHandle endpoint_rule_handle(EndpointRuleParams params)
{
  return RuleHandle{"endpoint:" + std::to_string(params.p()) + "," + std::to_string(params.q()),
                    [params](Profile const &s) { return endpoint_rule(params, s); }, params.n()};
}

RuleHandle median_rule_handle()
{
  return RuleHandle{"median", [](Profile const &s) { return median_rule(s); }, std::nullopt};
}

RuleHandle maximal_rule_handle()
{
  return RuleHandle{"maximal", [](Profile const &s) { return maximal_rule(s); }, std::nullopt};
}

RuleHandle averaging_rule_handle()
{
  return RuleHandle{"averaging", [](Profile const &s) { return averaging_rule(s); }, std::nullopt};
}

RuleHandle phantom_rule_handle(PhantomVector phantoms)
{
  if (phantoms.phantoms.empty())
  {
    throw RuleParameterError("phantom vector is empty");
  }
  std::size_t const n = phantoms.phantoms.size() - 1;
  if (auto defect = validate_phantoms(phantoms, n))
  {
    throw RuleParameterError(std::string("invalid phantom vector: ") + std::string(describe(*defect)));
  }
  return RuleHandle{"phantoms",
                    [ph = std::move(phantoms)](Profile const &s) { return generalized_median(ph, s); },
                    n};
}

}  // namespace ivagg
