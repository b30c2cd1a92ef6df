#include "ivagg/audit.hpp"
#include "ivagg/errors.hpp"
#include "ivagg/extern_rule.hpp"
#include "ivagg/rules.hpp"
#include "ivagg/sampling.hpp"

#include <doctest.h>

#include <chrono>
#include <string>

using namespace ivagg;
using namespace std::chrono_literals;

namespace {

std::string tool(std::string const &mode)
{
  return std::string("'") + IVAGG_EXTERN_TOOL + "' " + mode;
}

}  // namespace

TEST_CASE("extern maximal rule agrees with the built-in one")
{
  auto const ext = extern_rule_adapter(tool("maximal"));
  CHECK(ext.name == "extern:" + tool("maximal"));
  Rng rng(51);
  for (int k = 0; k < 200; ++k)
  {
    Profile const s = sample_profile(rng, 1 + rng.index(6));
    REQUIRE(ext(s) == maximal_rule(s));
  }
}

TEST_CASE("extern rule audits like the built-in rule")
{
  AuditConfig cfg;
  cfg.samples = 20;
  cfg.axioms  = {AxiomId::Anonymity, AxiomId::Responsiveness, AxiomId::Unanimity};
  auto const a = audit(extern_rule_adapter(tool("maximal")), cfg);
  auto const b = audit(maximal_rule_handle(), cfg);
  CHECK(a.compliant());
  REQUIRE(a.tallies.size() == b.tallies.size());
  for (std::size_t k = 0; k < a.tallies.size(); ++k)
  {
    CHECK(a.tallies[k].samples == b.tallies[k].samples);
    CHECK(a.tallies[k].failures == b.tallies[k].failures);
  }
}

TEST_CASE("extern failures surface as evaluation errors")
{
  Profile const s = Profile::make({make_interval(0, 1)});
  CHECK_THROWS_AS(run_extern_rule(tool("garbage"), s), RuleEvaluationError);
  CHECK_THROWS_AS(run_extern_rule(tool("crash"), s), RuleEvaluationError);
  CHECK_THROWS_AS(run_extern_rule("/nonexistent/rule-program", s), RuleEvaluationError);

  auto const start = std::chrono::steady_clock::now();
  CHECK_THROWS_AS(run_extern_rule(tool("hang"), s, 300ms), RuleEvaluationError);
  CHECK(std::chrono::steady_clock::now() - start < 5s);
}

TEST_CASE("garbage output aborts the audit after consecutive errors")
{
  AuditConfig cfg;
  cfg.samples = 100;
  cfg.axioms  = {AxiomId::Anonymity, AxiomId::Unanimity};
  auto const r = audit(extern_rule_adapter(tool("garbage")), cfg);
  CHECK(r.aborted);
  CHECK_FALSE(r.compliant());
  CHECK_FALSE(r.abort_reason.empty());
  std::size_t errors = 0, failures = 0;
  for (auto const &t : r.tallies)
  {
    errors += t.errors;
    failures += t.failures;
  }
  CHECK(errors == cfg.max_consecutive_errors);
  CHECK(failures == 0);
}

TEST_CASE("non-endpoint extern rules are not identified")
{
  CHECK_FALSE(identify_endpoint_rule(extern_rule_adapter(tool("dictator")), 3, 20));
  CHECK_FALSE(identify_endpoint_rule(extern_rule_adapter(tool("widest")), 3, 20));
  CHECK(identify_endpoint_rule(extern_rule_adapter(tool("maximal")), 3, 20) == EndpointQuotas{1, 1});
}
