#pragma once

#include "ivagg/interval.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ivagg {

/// Quotas of the endpoint rule f^{p,q} for n agents: 1 <= p, 1 <= q, p + q <= n + 1.
class EndpointRuleParams
{
public:
  /// Throws RuleParameterError when the quotas do not fit n.
  static EndpointRuleParams make(std::size_t p, std::size_t q, std::size_t n);

  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return q_; }
  std::size_t n() const noexcept { return n_; }

  friend bool operator==(EndpointRuleParams const &, EndpointRuleParams const &) = default;

private:
  EndpointRuleParams(std::size_t p, std::size_t q, std::size_t n) noexcept
    : p_(p)
    , q_(q)
    , n_(n)
  {}

  std::size_t p_;
  std::size_t q_;
  std::size_t n_;
};

/// All (p, q) with p + q <= n + 1, in row-major order of p then q.
std::vector<EndpointRuleParams> all_endpoint_params(std::size_t n);

/// p-th lowest lower endpoint and q-th highest upper endpoint (1-indexed,
/// duplicates counted separately). Throws RuleParameterError if |s| != n.
Interval endpoint_rule(EndpointRuleParams const &params, Profile const &s);

/// floor((n + 1) / 2).
std::size_t median_quota(std::size_t n) noexcept;

Interval median_rule(Profile const &s);
Interval maximal_rule(Profile const &s);

/// Arithmetic means of the lower and of the upper endpoints.
Interval averaging_rule(Profile const &s);

/// n + 1 phantom intervals over the extended reals.
struct PhantomVector
{
  std::vector<ExtendedInterval> phantoms;

  friend bool operator==(PhantomVector const &, PhantomVector const &) = default;
};

enum class PhantomDefect
{
  WrongLength,           ///< not exactly n + 1 phantoms
  TooManyUnboundedBelow, ///< more than n phantoms with lower bound -inf
  TooManyUnboundedAbove, ///< more than n phantoms with upper bound +inf
  TooManyAtPosInf,       ///< more than n copies of (inf, inf)
  TooManyAtNegInf,       ///< more than n copies of (-inf, -inf)
};

std::string_view describe(PhantomDefect defect) noexcept;

/// Returns nullopt when every profile of size n yields a bounded nonempty
/// median, otherwise the first violated count condition.
std::optional<PhantomDefect> validate_phantoms(PhantomVector const &phantoms, std::size_t n);

/// Median of S composed with P: the (n+1)-th smallest of the 2n+1 lower bounds
/// and the (n+1)-th largest of the 2n+1 upper bounds.
/// Throws RuleParameterError when the phantoms are invalid for |s|.
Interval generalized_median(PhantomVector const &phantoms, Profile const &s);

/// p copies of (inf,inf), q copies of (-inf,-inf), n+1-p-q copies of (-inf,inf).
PhantomVector endpoint_rule_phantoms(std::size_t p, std::size_t q, std::size_t n);

/// Uniform evaluation contract shared by built-in and external rules.
struct RuleHandle
{
  std::string                            name;
  std::function<Interval(Profile const &)> evaluate;
  /// Profile size the rule is defined for; nullopt means any n.
  std::optional<std::size_t>             arity;

  Interval operator()(Profile const &s) const { return evaluate(s); }
};

RuleHandle endpoint_rule_handle(EndpointRuleParams params);
RuleHandle median_rule_handle();
RuleHandle maximal_rule_handle();
RuleHandle averaging_rule_handle();
/// Throws RuleParameterError when the phantoms are invalid for n = |phantoms| - 1.
RuleHandle phantom_rule_handle(PhantomVector phantoms);

}  // namespace ivagg
