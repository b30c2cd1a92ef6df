#include "ivagg/preferences.hpp"

#include "ivagg/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ivagg {

namespace {

template <class... Ts>
struct overloaded : Ts...
{
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Preference weighted_l1(Interval peak, double lower_weight, double upper_weight)
{
  if (!(lower_weight > 0) || !(upper_weight > 0) || !std::isfinite(lower_weight) ||
      !std::isfinite(upper_weight))
  {
    throw std::invalid_argument("weighted L1 preference needs positive finite weights");
  }
  return Preference{peak, WeightedL1{lower_weight, upper_weight}};
}

Preference penalty(Interval peak, Interval reference)
{
  return Preference{peak, Penalty{reference}};
}

double pref_cost(Preference const &pref, Interval const &t) noexcept
{
  return std::visit(
    overloaded{
      [&](WeightedL1 const &w) {
        return w.lower_weight * std::abs(pref.peak.lo() - t.lo()) +
               w.upper_weight * std::abs(pref.peak.hi() - t.hi());
      },
      [&](Penalty const &p) {
        double const d = endpoint_distance(pref.peak, t);
        return between(pref.peak, t, p.reference) ? d : d + endpoint_distance(pref.peak, p.reference);
      },
    },
    pref.kind);
}

bool prefers(Preference const &pref, Interval const &a, Interval const &b) noexcept
{
  return pref_cost(pref, a) <= pref_cost(pref, b);
}

std::vector<Interval> misreport_grid(Profile const &s, SearchConfig const &config,
                                     std::optional<Interval> reference)
{
  std::vector<double> points;
  for (auto const &a : s)
  {
    points.push_back(a.lo());
    points.push_back(a.hi());
  }
  if (reference)
  {
    points.push_back(reference->lo());
    points.push_back(reference->hi());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<double> candidates = points;
  for (std::size_t k = 0; k + 1 < points.size(); ++k)
  {
    candidates.push_back(points[k] + (points[k + 1] - points[k]) / 2.0);
  }
  double const lowest  = points.front();
  double const highest = points.back();
  for (double margin : config.margins)
  {
    candidates.push_back(lowest - margin);
    candidates.push_back(highest + margin);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Interval> grid;
  grid.reserve(candidates.size() * (candidates.size() - 1) / 2);
  for (std::size_t i = 0; i < candidates.size(); ++i)
  {
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
    {
      grid.push_back(Interval::make(candidates[i], candidates[j]));
    }
  }
  return grid;
}

ManipulationResult find_manipulation(RuleHandle const &rule, Profile const &s, std::size_t agent,
                                     Preference const &pref, SearchConfig const &config)
{
  if (agent >= s.size())
  {
    throw std::out_of_range("agent index " + std::to_string(agent) + " out of range for n = " +
                            std::to_string(s.size()));
  }
  if (!(pref.peak == s[agent]))
  {
    throw std::invalid_argument("preference peak must equal the agent's truthful report");
  }

  ManipulationResult result{false, std::nullopt, rule(s), std::nullopt, 0.0};
  double const       truthful_cost = pref_cost(pref, result.truthful_outcome);

  std::optional<Interval> reference;
  if (auto const *p = std::get_if<Penalty>(&pref.kind))
  {
    reference = p->reference;
  }
  std::vector<Interval> candidates = misreport_grid(s, config, reference);
  Rng                   rng(config.seed);
  for (std::size_t k = 0; k < config.random_samples; ++k)
  {
    candidates.push_back(sample_interval(rng, static_cast<ProfileFlavor>(k % 3)));
  }
  candidates.insert(candidates.end(), config.extra_candidates.begin(), config.extra_candidates.end());

  for (auto const &misreport : candidates)
  {
    Interval const outcome = rule(s.with_agent(agent, misreport));
    double const   drop    = truthful_cost - pref_cost(pref, outcome);
    if (!(drop > config.improvement_threshold))
    {
      continue;
    }
    bool const better = !result.found || drop > result.cost_drop ||
                        (drop == result.cost_drop && lex_less(misreport, *result.misreport));
    if (better)
    {
      result.found               = true;
      result.misreport           = misreport;
      result.manipulated_outcome = outcome;
      result.cost_drop           = drop;
    }
  }
  return result;
}

}  // namespace ivagg
