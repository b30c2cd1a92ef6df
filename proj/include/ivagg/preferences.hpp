#pragma once

#include "ivagg/interval.hpp"
#include "ivagg/rules.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace ivagg {

/// cost(T) = lower_weight * |peak.lo - T.lo| + upper_weight * |peak.hi - T.hi|.
struct WeightedL1
{
  double lower_weight = 1.0;
  double upper_weight = 1.0;

  friend bool operator==(WeightedL1 const &, WeightedL1 const &) = default;
};

/// cost(T) = d(T) when T lies between the peak and the reference, and
/// d(T) + d(reference) otherwise, with d the endpoint distance to the peak.
/// This is the preference that turns any out-between-ness failure into a
/// profitable misreport.
struct Penalty
{
  Interval reference;

  friend bool operator==(Penalty const &, Penalty const &) = default;
};

/// Generalized single-peaked preference over intervals, expressed as a cost
/// (lower is better) with its unique minimum at the peak.
struct Preference
{
  Interval                           peak;
  std::variant<WeightedL1, Penalty>  kind;

  friend bool operator==(Preference const &, Preference const &) = default;
};

/// Throws std::invalid_argument for non-positive or non-finite weights.
Preference weighted_l1(Interval peak, double lower_weight = 1.0, double upper_weight = 1.0);
Preference penalty(Interval peak, Interval reference);

double pref_cost(Preference const &pref, Interval const &t) noexcept;
/// a is weakly preferred to b.
bool prefers(Preference const &pref, Interval const &a, Interval const &b) noexcept;

struct SearchConfig
{
  std::uint64_t         seed           = 0;
  std::size_t           random_samples = 200;
  std::vector<double>   margins        = {1.0, 10.0, 100.0};
  /// Misreports tried in addition to the grid and the random cloud.
  std::vector<Interval> extra_candidates;
  double                improvement_threshold = 1e-12;
};

struct ManipulationResult
{
  bool                    found = false;
  std::optional<Interval> misreport;
  Interval                truthful_outcome;
  std::optional<Interval> manipulated_outcome;
  double                  cost_drop = 0.0;
};

/// Deterministic part of the misreport search: every (lo, hi) with lo < hi
/// drawn from the profile's distinct endpoints, their midpoints, and
/// min - margin / max + margin. Endpoints of a Penalty reference join the
/// candidate set when given.
std::vector<Interval> misreport_grid(Profile const &s, SearchConfig const &config,
                                     std::optional<Interval> reference = std::nullopt);

/// Searches misreports for agent (0-based) against rule. Returns the largest
/// strict cost drop found; among equal drops the lexicographically smallest
/// misreport. Sound but incomplete: found=false is evidence, not proof.
///
/// Throws std::out_of_range for a bad agent index and std::invalid_argument
/// when pref.peak differs from the agent's reported interval.
ManipulationResult find_manipulation(RuleHandle const &rule, Profile const &s, std::size_t agent,
                                     Preference const &pref, SearchConfig const &config = {});

}  // namespace ivagg
