#include "ivagg/audit.hpp"

#include "ivagg/errors.hpp"
#include "ivagg/sampling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ivagg {

namespace {

struct AxiomInfo
{
  AxiomId          id;
  std::string_view name;
};

constexpr std::array<AxiomInfo, 12> kAxioms = {{
  {AxiomId::Responsiveness, "Responsiveness"},
  {AxiomId::Anonymity, "Anonymity"},
  {AxiomId::WeakNeutrality, "WeakNeutrality"},
  {AxiomId::StrongNeutrality, "StrongNeutrality"},
  {AxiomId::TranslationEquivariance, "TranslationEquivariance"},
  {AxiomId::ContinuityLipschitz, "ContinuityLipschitz"},
  {AxiomId::IndependentEndpoints, "IndependentEndpoints"},
  {AxiomId::OutBetweenness, "OutBetweenness"},
  {AxiomId::LowerProperty, "LowerProperty"},
  {AxiomId::UpperProperty, "UpperProperty"},
  {AxiomId::Unanimity, "Unanimity"},
  {AxiomId::Strategyproofness, "Strategyproofness"},
}};

bool close(Interval const &a, Interval const &b, double tol) noexcept
{
  return std::abs(a.lo() - b.lo()) <= tol && std::abs(a.hi() - b.hi()) <= tol;
}

AxiomCheck verdict(AxiomId id, bool ok, Witness witness)
{
  if (ok)
  {
    return AxiomCheck{id, Verdict::Pass, std::nullopt};
  }
  return AxiomCheck{id, Verdict::Fail, std::move(witness)};
}

void require_same_size(Profile const &s, Profile const &t)
{
  if (s.size() != t.size())
  {
    throw std::invalid_argument("profiles must have the same number of agents");
  }
}

void require_agent(Profile const &s, std::size_t agent)
{
  if (agent >= s.size())
  {
    throw std::invalid_argument("agent index " + std::to_string(agent) + " out of range for n = " +
                                std::to_string(s.size()));
  }
}

// pi S with (pi S)_i = S_{pi[i]}.
Profile permute(Profile const &s, std::vector<std::size_t> const &pi)
{
  std::vector<bool> seen(s.size(), false);
  if (pi.size() != s.size())
  {
    throw std::invalid_argument("permutation length differs from the profile size");
  }
  std::vector<Interval> out;
  out.reserve(s.size());
  for (std::size_t k : pi)
  {
    if (k >= s.size() || seen[k])
    {
      throw std::invalid_argument("not a permutation of the agents");
    }
    seen[k] = true;
    out.push_back(s[k]);
  }
  return Profile::make(std::move(out));
}

AxiomCheck neutrality(AxiomId id, RuleHandle const &rule, Profile const &s, MonotoneMap const &phi)
{
  Interval const outcome = rule(s);
  Interval const image   = apply_map_interval(phi, outcome);
  Interval const mapped  = rule(apply_map_profile(phi, s));
  Witness w;
  w.profile  = s;
  w.map      = phi;
  w.outcomes = {outcome, image, mapped};
  return verdict(id, close(image, mapped, kTransformTolerance), std::move(w));
}

AxiomCheck endpoint_side(AxiomId id, RuleHandle const &rule, Profile const &s, Profile const &t,
                         std::size_t agent)
{
  require_same_size(s, t);
  require_agent(s, agent);
  for (std::size_t j = 0; j < s.size(); ++j)
  {
    if (j != agent && !(s[j] == t[j]))
    {
      throw std::invalid_argument("profiles may differ only in the deviating agent");
    }
  }
  Interval const fs = rule(s);
  Interval const ft = rule(t);
  bool           ok;
  if (id == AxiomId::LowerProperty)
  {
    ok = fs.lo() == ft.lo() || (scalar_between(s[agent].lo(), fs.lo(), ft.lo()) &&
                                scalar_between(t[agent].lo(), ft.lo(), fs.lo()));
  }
  else
  {
    ok = fs.hi() == ft.hi() || (scalar_between(s[agent].hi(), fs.hi(), ft.hi()) &&
                                scalar_between(t[agent].hi(), ft.hi(), fs.hi()));
  }
  Witness w;
  w.profile  = s;
  w.other    = t;
  w.agent    = agent;
  w.outcomes = {fs, ft};
  return verdict(id, ok, std::move(w));
}

Interval perturb(Rng &rng, Interval const &a, double eps)
{
  for (int attempt = 0; attempt < 8; ++attempt)
  {
    double const lo = a.lo() + rng.uniform(-eps, eps);
    double const hi = a.hi() + rng.uniform(-eps, eps);
    if (lo < hi)
    {
      return Interval::make(lo, hi);
    }
  }
  // Narrow interval: move both endpoints together.
  double const d = rng.uniform(-eps, eps);
  if (a.lo() + d < a.hi() + d)
  {
    return Interval::make(a.lo() + d, a.hi() + d);
  }
  return a;
}

template <class T, class U>
T const &need(std::optional<T> const &field, U what)
{
  if (!field)
  {
    throw std::invalid_argument(std::string("witness lacks ") + what);
  }
  return *field;
}

}  // namespace

std::string_view axiom_name(AxiomId id) noexcept
{
  for (auto const &info : kAxioms)
  {
    if (info.id == id)
    {
      return info.name;
    }
  }
  return "Unknown";
}

std::optional<AxiomId> parse_axiom(std::string_view name) noexcept
{
  for (auto const &info : kAxioms)
  {
    if (info.name == name)
    {
      return info.id;
    }
  }
  return std::nullopt;
}

bool is_surrogate(AxiomId id) noexcept
{
  return id == AxiomId::ContinuityLipschitz;
}

std::vector<AxiomId> const &all_axioms()
{
  static std::vector<AxiomId> const ids = [] {
    std::vector<AxiomId> out;
    for (auto const &info : kAxioms)
    {
      out.push_back(info.id);
    }
    return out;
  }();
  return ids;
}

std::vector<AxiomId> const &default_axioms()
{
  static std::vector<AxiomId> const ids = {
    AxiomId::Responsiveness,       AxiomId::Anonymity,      AxiomId::WeakNeutrality,
    AxiomId::TranslationEquivariance, AxiomId::ContinuityLipschitz, AxiomId::IndependentEndpoints,
    AxiomId::OutBetweenness,       AxiomId::LowerProperty,  AxiomId::UpperProperty,
    AxiomId::Unanimity,
  };
  return ids;
}

AxiomCheck check_responsiveness(RuleHandle const &rule, Profile const &s, Profile const &t)
{
  require_same_size(s, t);
  for (std::size_t i = 0; i < s.size(); ++i)
  {
    if (!subset(s[i], t[i]))
    {
      throw std::invalid_argument("responsiveness needs S_i inside T_i for every agent");
    }
  }
  Interval const fs = rule(s);
  Interval const ft = rule(t);
  Witness w;
  w.profile  = s;
  w.other    = t;
  w.outcomes = {fs, ft};
  return verdict(AxiomId::Responsiveness, subset(fs, ft), std::move(w));
}

AxiomCheck check_anonymity(RuleHandle const &rule, Profile const &s,
                           std::vector<std::size_t> const &permutation)
{
  Profile const  permuted = permute(s, permutation);
  Interval const fs       = rule(s);
  Interval const fp       = rule(permuted);
  Witness w;
  w.profile     = s;
  w.permutation = permutation;
  w.outcomes    = {fs, fp};
  return verdict(AxiomId::Anonymity, fs == fp, std::move(w));
}

AxiomCheck check_weak_neutrality(RuleHandle const &rule, Profile const &s, MonotoneMap const &phi)
{
  if (phi.direction() != Direction::Increasing)
  {
    throw std::invalid_argument("weak neutrality takes increasing maps only");
  }
  return neutrality(AxiomId::WeakNeutrality, rule, s, phi);
}

AxiomCheck check_strong_neutrality(RuleHandle const &rule, Profile const &s, MonotoneMap const &phi)
{
  return neutrality(AxiomId::StrongNeutrality, rule, s, phi);
}

AxiomCheck check_translation_equivariance(RuleHandle const &rule, Profile const &s, double b)
{
  if (!std::isfinite(b))
  {
    throw std::invalid_argument("translation must be finite");
  }
  Interval const fs      = rule(s);
  Interval const shifted = rule(shift(s, b));
  Interval const target  = shift(fs, b);
  Witness w;
  w.profile  = s;
  w.shift    = b;
  w.outcomes = {fs, shifted, target};
  return verdict(AxiomId::TranslationEquivariance, close(shifted, target, kTransformTolerance),
                 std::move(w));
}

AxiomCheck check_lipschitz_pair(RuleHandle const &rule, Profile const &s, Profile const &t,
                                double eps)
{
  require_same_size(s, t);
  double const bound = eps + kTransformTolerance;
  for (std::size_t i = 0; i < s.size(); ++i)
  {
    if (std::abs(s[i].lo() - t[i].lo()) > bound || std::abs(s[i].hi() - t[i].hi()) > bound)
    {
      throw std::invalid_argument("perturbed profile moves an endpoint by more than eps");
    }
  }
  Interval const fs = rule(s);
  Interval const ft = rule(t);
  Witness w;
  w.profile  = s;
  w.other    = t;
  w.epsilon  = eps;
  w.outcomes = {fs, ft};
  return verdict(AxiomId::ContinuityLipschitz, close(fs, ft, bound), std::move(w));
}

AxiomCheck check_continuity_lipschitz(RuleHandle const &rule, Profile const &s, double eps,
                                      std::uint64_t seed, std::size_t perturbations)
{
  if (!(eps >= 0) || !std::isfinite(eps))
  {
    throw std::invalid_argument("eps must be a nonnegative finite number");
  }
  if (eps == 0)
  {
    return AxiomCheck{AxiomId::ContinuityLipschitz, Verdict::Pass, std::nullopt};
  }
  Rng rng(seed);
  for (std::size_t k = 0; k < perturbations; ++k)
  {
    std::vector<Interval> moved;
    moved.reserve(s.size());
    for (auto const &a : s)
    {
      moved.push_back(perturb(rng, a, eps));
    }
    AxiomCheck c = check_lipschitz_pair(rule, s, Profile::make(std::move(moved)), eps);
    if (!c.passed())
    {
      return c;
    }
  }
  return AxiomCheck{AxiomId::ContinuityLipschitz, Verdict::Pass, std::nullopt};
}

AxiomCheck check_independent_endpoints(RuleHandle const &rule, Profile const &s, Profile const &t)
{
  require_same_size(s, t);
  bool same_lo = true, same_hi = true;
  for (std::size_t i = 0; i < s.size(); ++i)
  {
    same_lo = same_lo && s[i].lo() == t[i].lo();
    same_hi = same_hi && s[i].hi() == t[i].hi();
  }
  if (!same_lo && !same_hi)
  {
    throw std::invalid_argument("profiles must share all lower or all upper endpoints");
  }
  Interval const fs = rule(s);
  Interval const ft = rule(t);
  bool const     ok = (!same_lo || fs.lo() == ft.lo()) && (!same_hi || fs.hi() == ft.hi());
  Witness w;
  w.profile  = s;
  w.other    = t;
  w.outcomes = {fs, ft};
  return verdict(AxiomId::IndependentEndpoints, ok, std::move(w));
}

AxiomCheck check_out_betweenness(RuleHandle const &rule, Profile const &s, std::size_t agent,
                                 Interval const &misreport)
{
  require_agent(s, agent);
  Interval const fs = rule(s);
  Interval const fm = rule(s.with_agent(agent, misreport));
  Witness w;
  w.profile   = s;
  w.agent     = agent;
  w.misreport = misreport;
  w.outcomes  = {fs, fm};
  return verdict(AxiomId::OutBetweenness, between(s[agent], fs, fm), std::move(w));
}

AxiomCheck check_lower_property(RuleHandle const &rule, Profile const &s, Profile const &t,
                                std::size_t agent)
{
  return endpoint_side(AxiomId::LowerProperty, rule, s, t, agent);
}

AxiomCheck check_upper_property(RuleHandle const &rule, Profile const &s, Profile const &t,
                                std::size_t agent)
{
  return endpoint_side(AxiomId::UpperProperty, rule, s, t, agent);
}

AxiomCheck check_endpoint_property(RuleHandle const &rule, Profile const &s, Profile const &t,
                                   std::size_t agent)
{
  AxiomCheck lower = check_lower_property(rule, s, t, agent);
  if (!lower.passed())
  {
    return lower;
  }
  return check_upper_property(rule, s, t, agent);
}

AxiomCheck check_unanimity(RuleHandle const &rule, Interval const &a, std::size_t n)
{
  if (n == 0)
  {
    throw std::invalid_argument("unanimity needs n >= 1");
  }
  Interval const out = rule(Profile::make(std::vector<Interval>(n, a)));
  Witness w;
  w.interval = a;
  w.n        = n;
  w.outcomes = {out};
  return verdict(AxiomId::Unanimity, out == a, std::move(w));
}

AxiomCheck check_strategyproofness(RuleHandle const &rule, Profile const &s, std::size_t agent,
                                   Preference const &pref, SearchConfig const &search)
{
  require_agent(s, agent);
  ManipulationResult const r = find_manipulation(rule, s, agent, pref, search);
  Witness w;
  w.profile    = s;
  w.agent      = agent;
  w.preference = pref;
  w.misreport  = r.misreport;
  w.outcomes   = {r.truthful_outcome};
  if (r.manipulated_outcome)
  {
    w.outcomes.push_back(*r.manipulated_outcome);
  }
  return verdict(AxiomId::Strategyproofness, !r.found, std::move(w));
}

AxiomCheck replay(RuleHandle const &rule, AxiomId axiom, Witness const &w)
{
  switch (axiom)
  {
  case AxiomId::Responsiveness:
    return check_responsiveness(rule, need(w.profile, "profile"), need(w.other, "other profile"));
  case AxiomId::Anonymity:
    return check_anonymity(rule, need(w.profile, "profile"), need(w.permutation, "permutation"));
  case AxiomId::WeakNeutrality:
    return check_weak_neutrality(rule, need(w.profile, "profile"), need(w.map, "map"));
  case AxiomId::StrongNeutrality:
    return check_strong_neutrality(rule, need(w.profile, "profile"), need(w.map, "map"));
  case AxiomId::TranslationEquivariance:
    return check_translation_equivariance(rule, need(w.profile, "profile"), need(w.shift, "shift"));
  case AxiomId::ContinuityLipschitz:
    return check_lipschitz_pair(rule, need(w.profile, "profile"), need(w.other, "other profile"),
                                need(w.epsilon, "epsilon"));
  case AxiomId::IndependentEndpoints:
    return check_independent_endpoints(rule, need(w.profile, "profile"),
                                       need(w.other, "other profile"));
  case AxiomId::OutBetweenness:
    return check_out_betweenness(rule, need(w.profile, "profile"), need(w.agent, "agent"),
                                 need(w.misreport, "misreport"));
  case AxiomId::LowerProperty:
    return check_lower_property(rule, need(w.profile, "profile"), need(w.other, "other profile"),
                                need(w.agent, "agent"));
  case AxiomId::UpperProperty:
    return check_upper_property(rule, need(w.profile, "profile"), need(w.other, "other profile"),
                                need(w.agent, "agent"));
  case AxiomId::Unanimity:
    return check_unanimity(rule, need(w.interval, "interval"), need(w.n, "n"));
  case AxiomId::Strategyproofness:
  {
    Profile const    &s     = need(w.profile, "profile");
    std::size_t const agent = need(w.agent, "agent");
    Preference const &pref  = need(w.preference, "preference");
    if (!w.misreport)
    {
      return check_strategyproofness(rule, s, agent, pref);
    }
    Interval const truthful = rule(s);
    Interval const deviated = rule(s.with_agent(agent, *w.misreport));
    bool const     gains =
      pref_cost(pref, truthful) - pref_cost(pref, deviated) > SearchConfig{}.improvement_threshold;
    Witness out  = w;
    out.outcomes = {truthful, deviated};
    return verdict(AxiomId::Strategyproofness, !gains, std::move(out));
  }
  }
  throw std::invalid_argument("unknown axiom");
}

AxiomTally const *AuditReport::find(AxiomId id) const noexcept
{
  for (auto const &t : tallies)
  {
    if (t.axiom == id)
    {
      return &t;
    }
  }
  return nullptr;
}

std::size_t AuditReport::total_failures() const noexcept
{
  std::size_t total = 0;
  for (auto const &t : tallies)
  {
    total += t.failures;
  }
  return total;
}

namespace {

Interval random_misreport(Rng &rng, Profile const &s, std::size_t agent)
{
  switch (rng.index(3))
  {
  case 0:
    return sample_interval(rng, static_cast<ProfileFlavor>(rng.index(3)));
  case 1:
  {
    // Reuse endpoints already present in the profile to provoke ties.
    std::vector<double> points;
    for (auto const &a : s)
    {
      points.push_back(a.lo());
      points.push_back(a.hi());
    }
    double const x = points[rng.index(points.size())];
    double const y = points[rng.index(points.size())];
    if (x != y)
    {
      return Interval::make(std::min(x, y), std::max(x, y));
    }
    return Interval::make(x, x + 1.0);
  }
  default:
  {
    Interval const &own = s[agent];
    double const    lo  = own.lo() + rng.uniform(-3.0, 3.0);
    double const    hi  = own.hi() + rng.uniform(-3.0, 3.0);
    if (lo < hi)
    {
      return Interval::make(lo, hi);
    }
    return Interval::make(hi, lo + (lo == hi ? 1.0 : 0.0));
  }
  }
}

Interval widen(Rng &rng, Interval const &a)
{
  auto amount = [&] {
    switch (rng.index(3))
    {
    case 0:
      return 0.0;
    case 1:
      return static_cast<double>(1 + rng.index(3));
    default:
      return rng.uniform(0.0, 3.0);
    }
  };
  return Interval::make(a.lo() - amount(), a.hi() + amount());
}

std::vector<double> anchors_for(Profile const &s, Interval const &outcome)
{
  std::vector<double> anchors;
  for (auto const &a : s)
  {
    anchors.push_back(a.lo());
    anchors.push_back(a.hi());
  }
  anchors.push_back(outcome.lo());
  anchors.push_back(outcome.hi());
  return anchors;
}

Preference random_preference(Rng &rng, RuleHandle const &rule, Profile const &s, std::size_t agent)
{
  if (rng.bernoulli(0.5))
  {
    return weighted_l1(s[agent], rng.log_uniform(0.1, 10.0), rng.log_uniform(0.1, 10.0));
  }
  // Penalty preference whose reference is the outcome of some misreport.
  Interval const misreport = random_misreport(rng, s, agent);
  return penalty(s[agent], rule(s.with_agent(agent, misreport)));
}

AxiomCheck run_sample(AxiomId id, RuleHandle const &rule, AuditConfig const &config, Rng &rng,
                      std::size_t index)
{
  std::size_t const n = config.n;
  switch (id)
  {
  case AxiomId::Responsiveness:
  {
    Profile const         s = sample_profile(rng, n);
    std::vector<Interval> wider;
    for (auto const &a : s)
    {
      wider.push_back(widen(rng, a));
    }
    return check_responsiveness(rule, s, Profile::make(std::move(wider)));
  }
  case AxiomId::Anonymity:
  {
    Profile const s = sample_profile(rng, n);
    return check_anonymity(rule, s, rng.permutation(n));
  }
  case AxiomId::WeakNeutrality:
  {
    Profile const s   = sample_profile(rng, n);
    auto const    phi = random_increasing_map(rng.next(), anchors_for(s, rule(s)));
    return check_weak_neutrality(rule, s, phi);
  }
  case AxiomId::StrongNeutrality:
  {
    Profile const s = sample_profile(rng, n);
    switch (index % 3)
    {
    case 0:
      return check_strong_neutrality(rule, s, MonotoneMap::reflection());
    case 1:
      return check_strong_neutrality(rule, s, random_decreasing_map(rng.next(), anchors_for(s, rule(s))));
    default:
      return check_strong_neutrality(rule, s, random_increasing_map(rng.next(), anchors_for(s, rule(s))));
    }
  }
  case AxiomId::TranslationEquivariance:
  {
    Profile const s = sample_profile(rng, n);
    double const  b = rng.bernoulli(0.5) ? rng.uniform(-100.0, 100.0)
                                         : static_cast<double>(rng.index(41)) - 20.0;
    return check_translation_equivariance(rule, s, b);
  }
  case AxiomId::ContinuityLipschitz:
  {
    constexpr double kEps[] = {0.001, 0.01, 0.1, 1.0};
    Profile const    s      = sample_profile(rng, n);
    double const     eps    = kEps[rng.index(4)];
    return check_continuity_lipschitz(rule, s, eps, rng.next(), config.perturbations);
  }
  case AxiomId::IndependentEndpoints:
  {
    Profile const         s          = sample_profile(rng, n);
    bool const            keep_lower = index % 2 == 0;
    std::vector<Interval> t;
    for (auto const &a : s)
    {
      double const width = rng.bernoulli(0.5) ? static_cast<double>(1 + rng.index(4))
                                              : rng.uniform(0.01, 5.0);
      t.push_back(keep_lower ? Interval::make(a.lo(), a.lo() + width)
                             : Interval::make(a.hi() - width, a.hi()));
    }
    return check_independent_endpoints(rule, s, Profile::make(std::move(t)));
  }
  case AxiomId::OutBetweenness:
  {
    Profile const     s     = sample_profile(rng, n);
    std::size_t const agent = rng.index(n);
    return check_out_betweenness(rule, s, agent, random_misreport(rng, s, agent));
  }
  case AxiomId::LowerProperty:
  case AxiomId::UpperProperty:
  {
    Profile const     s     = sample_profile(rng, n);
    std::size_t const agent = rng.index(n);
    Profile const     t     = s.with_agent(agent, random_misreport(rng, s, agent));
    return id == AxiomId::LowerProperty ? check_lower_property(rule, s, t, agent)
                                        : check_upper_property(rule, s, t, agent);
  }
  case AxiomId::Unanimity:
    return check_unanimity(rule, sample_interval(rng, static_cast<ProfileFlavor>(rng.index(3))), n);
  case AxiomId::Strategyproofness:
  {
    Profile const     s     = sample_profile(rng, n);
    std::size_t const agent = rng.index(n);
    Preference const  pref  = random_preference(rng, rule, s, agent);
    SearchConfig      search;
    search.seed           = rng.next();
    search.random_samples = config.search_random_samples;
    return check_strategyproofness(rule, s, agent, pref, search);
  }
  }
  throw std::invalid_argument("unknown axiom");
}

}  // namespace

AuditReport audit(RuleHandle const &rule, AuditConfig const &config)
{
  if (config.n == 0)
  {
    throw std::invalid_argument("audit needs n >= 1");
  }
  if (rule.arity && *rule.arity != config.n)
  {
    throw RuleParameterError("rule " + rule.name + " is defined for n = " +
                             std::to_string(*rule.arity) + ", audit asked for n = " +
                             std::to_string(config.n));
  }
  AuditReport report;
  report.rule   = rule.name;
  report.config = config;

  std::size_t consecutive_errors = 0;
  for (AxiomId id : config.axioms)
  {
    AxiomTally tally;
    tally.axiom = id;
    for (std::size_t k = 0; k < config.samples && !report.aborted; ++k)
    {
      Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(id), k));
      ++tally.samples;
      try
      {
        AxiomCheck c = run_sample(id, rule, config, rng, k);
        consecutive_errors = 0;
        if (!c.passed())
        {
          ++tally.failures;
          if (!tally.first_witness)
          {
            tally.first_witness = std::move(c.witness);
          }
        }
      }
      catch (Error const &e)
      {
        // RuleEvaluationError from external rules, InvalidInterval from a
        // rule that returned an empty or non-finite interval.
        ++tally.errors;
        if (++consecutive_errors >= config.max_consecutive_errors)
        {
          report.aborted      = true;
          report.abort_reason = std::string(axiom_name(id)) + ": " +
                                std::to_string(consecutive_errors) +
                                " consecutive rule-evaluation errors; last: " + e.what();
        }
      }
    }
    report.tallies.push_back(std::move(tally));
    if (report.aborted)
    {
      break;
    }
  }
  return report;
}

Profile staircase_profile(std::size_t n)
{
  std::vector<Interval> agents;
  agents.reserve(n);
  for (std::size_t k = 1; k <= n; ++k)
  {
    agents.push_back(Interval::make(2.0 * static_cast<double>(k) - 1.0, 2.0 * static_cast<double>(k)));
  }
  return Profile::make(std::move(agents));
}

std::optional<EndpointQuotas> identify_endpoint_rule(RuleHandle const &rule, std::size_t n,
                                                     std::size_t confirmations, std::uint64_t seed)
{
  if (n == 0)
  {
    return std::nullopt;
  }
  Interval const out = rule(staircase_profile(n));
  // inf = 2p - 1 and sup = 2(n + 1 - q) on the staircase.
  double const p_real = (out.lo() + 1.0) / 2.0;
  double const q_real = static_cast<double>(n + 1) - out.hi() / 2.0;
  double const limit  = static_cast<double>(n);
  if (p_real != std::floor(p_real) || q_real != std::floor(q_real) || p_real < 1 || q_real < 1 ||
      p_real > limit || q_real > limit)
  {
    return std::nullopt;
  }
  auto const p = static_cast<std::size_t>(p_real);
  auto const q = static_cast<std::size_t>(q_real);
  if (p + q > n + 1)
  {
    return std::nullopt;
  }
  auto const params = EndpointRuleParams::make(p, q, n);
  Rng        rng(seed);
  for (std::size_t k = 0; k < confirmations; ++k)
  {
    Profile const s = sample_profile(rng, n);
    if (!(rule(s) == endpoint_rule(params, s)))
    {
      return std::nullopt;
    }
  }
  return EndpointQuotas{p, q};
}

}  // namespace ivagg
