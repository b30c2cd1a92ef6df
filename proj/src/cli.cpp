#include "ivagg/cli.hpp"

#include "ivagg/audit.hpp"
#include "ivagg/errors.hpp"
#include "ivagg/json_io.hpp"
#include "ivagg/preferences.hpp"
#include "ivagg/rule_spec.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ivagg {

namespace {

struct Options
{
  std::string   rule = "median";
  std::string   profile;
  std::size_t   n       = 3;
  std::size_t   samples = 1000;
  std::uint64_t seed    = 42;
  std::string   axioms  = "default";
  std::size_t   agent   = 1;
  std::string   pref    = "l1:1,1";
  long          timeout_ms = kDefaultExternTimeout.count();
  std::string   out;
};

std::chrono::milliseconds timeout_of(Options const &o)
{
  if (o.timeout_ms <= 0)
  {
    throw ParseError("--timeout must be positive (milliseconds)");
  }
  return std::chrono::milliseconds(o.timeout_ms);
}

ProfileDocument load_profile(std::string const &path)
{
  if (path.empty())
  {
    throw ParseError("--profile is required");
  }
  try
  {
    return profile_document_from_json(read_json_file(path));
  }
  catch (InvalidInterval const &e)
  {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<AxiomId> parse_axiom_list(std::string const &text)
{
  if (text == "default")
  {
    return default_axioms();
  }
  if (text == "all")
  {
    return all_axioms();
  }
  std::vector<AxiomId> out;
  std::stringstream    ss(text);
  std::string          item;
  while (std::getline(ss, item, ','))
  {
    if (item.empty())
    {
      continue;
    }
    auto id = parse_axiom(item);
    if (!id)
    {
      throw ParseError("unknown axiom id \"" + item + "\"");
    }
    if (std::find(out.begin(), out.end(), *id) == out.end())
    {
      out.push_back(*id);
    }
  }
  return out;
}

std::pair<double, double> parse_number_pair(std::string_view text, std::string const &what)
{
  auto const comma = text.find(',');
  if (comma == std::string_view::npos)
  {
    throw ParseError(what + " needs two comma-separated numbers");
  }
  auto parse_one = [&](std::string_view part) {
    double v       = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
    {
      throw ParseError("malformed number \"" + std::string(part) + "\" in " + what);
    }
    return v;
  };
  return {parse_one(text.substr(0, comma)), parse_one(text.substr(comma + 1))};
}

// l1 | l1:a,b | penalty | penalty:lo,hi
Preference parse_preference(std::string const &text, Interval peak, RuleHandle const &rule,
                            Profile const &s)
{
  std::string_view const t = text;
  try
  {
    if (t == "l1")
    {
      return weighted_l1(peak);
    }
    if (t.starts_with("l1:"))
    {
      auto [a, b] = parse_number_pair(t.substr(3), "--pref");
      return weighted_l1(peak, a, b);
    }
    if (t == "penalty")
    {
      return penalty(peak, rule(s));
    }
    if (t.starts_with("penalty:"))
    {
      auto [lo, hi] = parse_number_pair(t.substr(8), "--pref");
      return penalty(peak, Interval::make(lo, hi));
    }
  }
  catch (std::invalid_argument const &e)
  {
    throw ParseError(std::string("--pref: ") + e.what());
  }
  catch (InvalidInterval const &e)
  {
    throw ParseError(std::string("--pref: ") + e.what());
  }
  throw ParseError("unknown preference \"" + text + "\"; expected l1, l1:a,b, penalty or penalty:lo,hi");
}

int cmd_aggregate(Options const &o, std::ostream &out)
{
  ProfileDocument const doc  = load_profile(o.profile);
  RuleHandle const      rule = load_rule(parse_rule_spec(o.rule), doc.profile.size(), timeout_of(o));
  out << format_interval_json(rule(doc.profile)) << "\n";
  return kExitOk;
}

void print_audit_table(AuditReport const &report, std::ostream &out)
{
  out << "rule: " << report.rule << "  n=" << report.config.n
      << "  samples=" << report.config.samples << "  seed=" << report.config.seed << "\n";
  out << std::left << std::setw(32) << "axiom" << std::right << std::setw(9) << "samples"
      << std::setw(10) << "failures" << std::setw(8) << "errors" << "  verdict\n";
  bool any_surrogate = false;
  for (auto const &t : report.tallies)
  {
    std::string name(axiom_name(t.axiom));
    if (is_surrogate(t.axiom))
    {
      name += " (surrogate)";
      any_surrogate = true;
    }
    out << std::left << std::setw(32) << name << std::right << std::setw(9) << t.samples
        << std::setw(10) << t.failures << std::setw(8) << t.errors << "  "
        << (t.failures == 0 ? "pass" : "FAIL") << "\n";
  }
  if (any_surrogate)
  {
    out << "(surrogate) continuity is audited through a sampled 1-Lipschitz bound\n";
  }
  if (report.aborted)
  {
    out << "aborted: " << report.abort_reason << "\n";
  }
}

int cmd_audit(Options const &o, std::ostream &out)
{
  if (o.n == 0)
  {
    throw ParseError("--n must be at least 1");
  }
  AuditConfig config;
  config.n       = o.n;
  config.samples = o.samples;
  config.seed    = o.seed;
  config.axioms  = parse_axiom_list(o.axioms);

  RuleHandle const  rule   = load_rule(parse_rule_spec(o.rule), o.n, timeout_of(o));
  AuditReport const report = audit(rule, config);

  std::string const path = o.out.empty() ? "audit_report.json" : o.out;
  std::ofstream     file(path);
  if (!file)
  {
    throw ParseError("cannot write " + path);
  }
  file << audit_report_to_json(report).dump(2) << "\n";

  print_audit_table(report, out);
  out << "report: " << path << "\n";
  if (report.total_failures() > 0)
  {
    return kExitAxiomFailures;
  }
  return report.aborted ? kExitInputError : kExitOk;
}

int cmd_identify(Options const &o, std::ostream &out)
{
  if (o.n == 0)
  {
    throw ParseError("--n must be at least 1");
  }
  RuleHandle const rule      = load_rule(parse_rule_spec(o.rule), o.n, timeout_of(o));
  Profile const    staircase = staircase_profile(o.n);
  out << "staircase:";
  for (auto const &a : staircase)
  {
    out << " " << format_interval(a);
  }
  out << "\noutcome: " << format_interval(rule(staircase)) << "\n";
  if (auto quotas = identify_endpoint_rule(rule, o.n, 200, o.seed))
  {
    out << "endpoint rule: (" << quotas->p << "," << quotas->q << ")\n";
  }
  else
  {
    out << "not an endpoint rule\n";
  }
  return kExitOk;
}

int cmd_manipulate(Options const &o, std::ostream &out)
{
  ProfileDocument const doc = load_profile(o.profile);
  Profile const        &s   = doc.profile;
  if (o.agent < 1 || o.agent > s.size())
  {
    throw ParseError("--agent " + std::to_string(o.agent) + " out of range 1.." +
                     std::to_string(s.size()));
  }
  std::size_t const agent = o.agent - 1;
  RuleHandle const  rule  = load_rule(parse_rule_spec(o.rule), s.size(), timeout_of(o));
  Preference const  pref  = parse_preference(o.pref, s[agent], rule, s);

  SearchConfig search;
  search.seed = o.seed;
  ManipulationResult const r = find_manipulation(rule, s, agent, pref, search);

  nlohmann::json j{{"found", r.found},
                   {"agent", o.agent},
                   {"preference", preference_to_json(pref)},
                   {"truthful_outcome", interval_to_json(r.truthful_outcome)},
                   {"cost_drop", r.cost_drop}};
  if (r.found)
  {
    j["misreport"]           = interval_to_json(*r.misreport);
    j["manipulated_outcome"] = interval_to_json(*r.manipulated_outcome);
  }
  out << (r.found ? "found" : "not found") << "\n" << j.dump() << "\n";
  return kExitOk;
}

int cmd_sweep(Options const &o, std::ostream &out)
{
  ProfileDocument const doc = load_profile(o.profile);
  Profile const        &s   = doc.profile;
  std::ostringstream    csv;
  csv << "p,q,lo,hi\n";
  out << std::right << std::setw(4) << "p" << std::setw(4) << "q" << "  interval\n";
  for (auto const &params : all_endpoint_params(s.size()))
  {
    Interval const r = endpoint_rule(params, s);
    out << std::setw(4) << params.p() << std::setw(4) << params.q() << "  " << format_interval(r)
        << "\n";
    csv << params.p() << "," << params.q() << "," << format_number(r.lo()) << ","
        << format_number(r.hi()) << "\n";
  }
  if (!o.out.empty())
  {
    std::ofstream file(o.out);
    if (!file)
    {
      throw ParseError("cannot write " + o.out);
    }
    file << csv.str();
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Interval aggregation rules and axiom audits", "ivagg"};
  app.require_subcommand(1);
  Options o;

  auto add_rule = [&](CLI::App *cmd) {
    cmd->add_option("--rule", o.rule,
                    "endpoint:p,q | median | maximal | averaging | phantoms:<file> | extern:<command>");
    cmd->add_option("--timeout", o.timeout_ms, "per-call timeout for extern rules, in ms");
  };

  auto *aggregate = app.add_subcommand("aggregate", "Aggregate a profile with one rule");
  add_rule(aggregate);
  aggregate->add_option("--profile", o.profile, "profile JSON file")->required();

  auto *audit_cmd = app.add_subcommand("audit", "Property-test a rule against the axioms");
  add_rule(audit_cmd);
  audit_cmd->add_option("--n", o.n, "number of agents");
  audit_cmd->add_option("--samples", o.samples, "samples per axiom");
  audit_cmd->add_option("--seed", o.seed, "master seed");
  audit_cmd->add_option("--axioms", o.axioms, "comma-separated axiom ids, 'default' or 'all'");
  audit_cmd->add_option("--out", o.out, "report JSON path (default audit_report.json)");

  auto *identify = app.add_subcommand("identify", "Recover endpoint-rule quotas from a rule");
  add_rule(identify);
  identify->add_option("--n", o.n, "number of agents");
  identify->add_option("--seed", o.seed, "seed for the confirmation profiles");

  auto *manipulate = app.add_subcommand("manipulate", "Search for a profitable misreport");
  add_rule(manipulate);
  manipulate->add_option("--profile", o.profile, "profile JSON file")->required();
  manipulate->add_option("--agent", o.agent, "deviating agent, 1-based");
  manipulate->add_option("--pref", o.pref, "l1 | l1:a,b | penalty | penalty:lo,hi");
  manipulate->add_option("--seed", o.seed, "seed for the random misreports");

  auto *sweep = app.add_subcommand("sweep", "Tabulate every endpoint rule on a profile");
  sweep->add_option("--profile", o.profile, "profile JSON file")->required();
  sweep->add_option("--out", o.out, "also write the table as CSV");

  std::reverse(args.begin(), args.end());
  try
  {
    app.parse(args);
  }
  catch (CLI::ParseError const &e)
  {
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try
  {
    if (*aggregate)
    {
      return cmd_aggregate(o, out);
    }
    if (*audit_cmd)
    {
      return cmd_audit(o, out);
    }
    if (*identify)
    {
      return cmd_identify(o, out);
    }
    if (*manipulate)
    {
      return cmd_manipulate(o, out);
    }
    return cmd_sweep(o, out);
  }
  catch (RuleParameterError const &e)
  {
    err << "error: " << e.what() << "\n";
    return kExitRuleParameters;
  }
  catch (Error const &e)
  {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  catch (nlohmann::json::exception const &e)
  {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  catch (std::exception const &e)
  {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace ivagg
