#pragma once

#include "ivagg/interval.hpp"
#include "ivagg/preferences.hpp"
#include "ivagg/rules.hpp"
#include "ivagg/transforms.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ivagg {

enum class AxiomId
{
  Responsiveness,
  Anonymity,
  WeakNeutrality,
  StrongNeutrality,
  TranslationEquivariance,
  ContinuityLipschitz,
  IndependentEndpoints,
  OutBetweenness,
  LowerProperty,
  UpperProperty,
  Unanimity,
  Strategyproofness,
};

std::string_view axiom_name(AxiomId id) noexcept;
std::optional<AxiomId> parse_axiom(std::string_view name) noexcept;
/// True for axioms that are checked through a sampled stand-in rather than
/// their exact definition (continuity is audited through a Lipschitz bound).
bool is_surrogate(AxiomId id) noexcept;

std::vector<AxiomId> const &all_axioms();
/// Everything an endpoint rule satisfies: all axioms except StrongNeutrality
/// (asymmetric quotas fail it) and Strategyproofness (grid search, opt-in).
std::vector<AxiomId> const &default_axioms();

/// Absolute per-endpoint tolerance after a map or translation is applied.
inline constexpr double kTransformTolerance = 1e-9;

/// Complete instance behind a verdict. Which fields are set depends on the axiom.
struct Witness
{
  std::optional<Profile>                  profile;
  std::optional<Profile>                  other;        ///< T, the perturbed or misreport profile
  std::optional<std::vector<std::size_t>> permutation;  ///< (pi S)_i = S_{pi[i]}
  std::optional<MonotoneMap>              map;
  std::optional<double>                   shift;
  std::optional<double>                   epsilon;
  std::optional<std::size_t>              agent;        ///< 0-based
  std::optional<Interval>                 misreport;
  std::optional<Interval>                 interval;     ///< unanimity input
  std::optional<std::size_t>              n;
  std::optional<Preference>               preference;
  /// Rule outputs observed while checking, for diagnostics only.
  std::vector<Interval>                   outcomes;
};

enum class Verdict
{
  Pass,
  Fail
};

struct AxiomCheck
{
  AxiomId                axiom;
  Verdict                verdict = Verdict::Pass;
  std::optional<Witness> witness;  ///< always set on Fail

  bool passed() const noexcept { return verdict == Verdict::Pass; }
};

// Single-instance checks. Precondition violations throw std::invalid_argument;
// rule failures propagate as thrown by the rule.

AxiomCheck check_responsiveness(RuleHandle const &rule, Profile const &s, Profile const &t);
AxiomCheck check_anonymity(RuleHandle const &rule, Profile const &s,
                           std::vector<std::size_t> const &permutation);
AxiomCheck check_weak_neutrality(RuleHandle const &rule, Profile const &s, MonotoneMap const &phi);
AxiomCheck check_strong_neutrality(RuleHandle const &rule, Profile const &s, MonotoneMap const &phi);
AxiomCheck check_translation_equivariance(RuleHandle const &rule, Profile const &s, double b);
/// Perturbs every endpoint within [-eps, eps] `perturbations` times; passes
/// iff every output endpoint moves by at most eps + kTransformTolerance.
AxiomCheck check_continuity_lipschitz(RuleHandle const &rule, Profile const &s, double eps,
                                      std::uint64_t seed, std::size_t perturbations = 8);
/// The deterministic core of the Lipschitz check for one perturbed profile.
AxiomCheck check_lipschitz_pair(RuleHandle const &rule, Profile const &s, Profile const &t,
                                double eps);
/// s and t must agree on every lower endpoint or on every upper endpoint.
AxiomCheck check_independent_endpoints(RuleHandle const &rule, Profile const &s, Profile const &t);
AxiomCheck check_out_betweenness(RuleHandle const &rule, Profile const &s, std::size_t agent,
                                 Interval const &misreport);
/// s and t may differ only in agent's entry.
AxiomCheck check_lower_property(RuleHandle const &rule, Profile const &s, Profile const &t,
                                std::size_t agent);
AxiomCheck check_upper_property(RuleHandle const &rule, Profile const &s, Profile const &t,
                                std::size_t agent);
/// Both properties; a failure reports whichever failed first (lower before upper).
AxiomCheck check_endpoint_property(RuleHandle const &rule, Profile const &s, Profile const &t,
                                   std::size_t agent);
AxiomCheck check_unanimity(RuleHandle const &rule, Interval const &a, std::size_t n);
/// Runs find_manipulation; fails when a strict improvement exists.
AxiomCheck check_strategyproofness(RuleHandle const &rule, Profile const &s, std::size_t agent,
                                   Preference const &pref, SearchConfig const &search = {});

/// Re-runs the check a witness describes. Throws std::invalid_argument when
/// the witness lacks the fields that axiom needs.
AxiomCheck replay(RuleHandle const &rule, AxiomId axiom, Witness const &witness);

struct AuditConfig
{
  std::size_t          n       = 3;
  std::size_t          samples = 1000;
  std::uint64_t        seed    = 42;
  std::vector<AxiomId> axioms  = default_axioms();
  std::size_t          perturbations = 8;
  /// Random misreports per Strategyproofness sample (on top of the grid).
  std::size_t          search_random_samples = 50;
  /// Abort the campaign after this many rule-evaluation errors in a row.
  std::size_t          max_consecutive_errors = 10;
};

struct AxiomTally
{
  AxiomId                axiom;
  std::size_t            samples  = 0;  ///< instances attempted
  std::size_t            failures = 0;
  std::size_t            errors   = 0;  ///< rule-evaluation errors, not axiom failures
  std::optional<Witness> first_witness;
};

struct AuditReport
{
  std::string             rule;
  AuditConfig             config;
  std::vector<AxiomTally> tallies;
  bool                    aborted = false;
  std::string             abort_reason;

  AxiomTally const *find(AxiomId id) const noexcept;
  std::size_t total_failures() const noexcept;
  bool compliant() const noexcept { return !aborted && total_failures() == 0; }
};

/// Sampled campaign. Every sample's randomness derives from
/// (seed, axiom, sample index), so the report is a function of (rule, config).
AuditReport audit(RuleHandle const &rule, AuditConfig const &config);

/// The disjoint profile ((1,2), (3,4), ..., (2n-1, 2n)).
Profile staircase_profile(std::size_t n);

struct EndpointQuotas
{
  std::size_t p;
  std::size_t q;

  friend bool operator==(EndpointQuotas const &, EndpointQuotas const &) = default;
};

/// Reads candidate quotas off the rule's output on the staircase profile,
/// then confirms them on `confirmations` random profiles. nullopt if the
/// read-off is not a valid quota pair or any confirmation differs.
std::optional<EndpointQuotas> identify_endpoint_rule(RuleHandle const &rule, std::size_t n,
                                                     std::size_t   confirmations = 200,
                                                     std::uint64_t seed          = 0x1dea);

}  // namespace ivagg
