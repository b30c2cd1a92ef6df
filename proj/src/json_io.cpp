#include "ivagg/json_io.hpp"

#include "ivagg/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace ivagg {

using nlohmann::json;

namespace {

json const &field(json const &j, char const *key)
{
  if (!j.is_object())
  {
    throw ParseError(std::string("expected an object with field \"") + key + "\"");
  }
  auto it = j.find(key);
  if (it == j.end())
  {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

double number(json const &j, char const *what)
{
  if (!j.is_number())
  {
    throw ParseError(std::string(what) + " must be a number, got " + j.dump());
  }
  return j.get<double>();
}

double number_field(json const &j, char const *key)
{
  return number(field(j, key), key);
}

std::size_t index_field(json const &j, char const *key)
{
  json const &v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
  {
    throw ParseError(std::string(key) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

json const &array_field(json const &j, char const *key)
{
  json const &v = field(j, key);
  if (!v.is_array())
  {
    throw ParseError(std::string("field \"") + key + "\" must be an array");
  }
  return v;
}

}  // namespace

std::string format_number(double x)
{
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{})
  {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  }
  return std::string(buf, end);
}

std::string format_interval_json(Interval const &a)
{
  return "{\"lo\":" + format_number(a.lo()) + ",\"hi\":" + format_number(a.hi()) + "}";
}

std::string format_interval(Interval const &a)
{
  return "(" + format_number(a.lo()) + ", " + format_number(a.hi()) + ")";
}

json interval_to_json(Interval const &a)
{
  return json{{"lo", a.lo()}, {"hi", a.hi()}};
}

Interval interval_from_json(json const &j)
{
  return Interval::make(number_field(j, "lo"), number_field(j, "hi"));
}

json profile_document_to_json(ProfileDocument const &doc)
{
  json agents = json::array();
  for (std::size_t i = 0; i < doc.profile.size(); ++i)
  {
    json a = interval_to_json(doc.profile[i]);
    if (!doc.labels.empty())
    {
      a["label"] = doc.labels.at(i);
    }
    agents.push_back(std::move(a));
  }
  return json{{"agents", std::move(agents)}};
}

ProfileDocument profile_document_from_json(json const &j)
{
  json const           &agents = array_field(j, "agents");
  std::vector<Interval> intervals;
  std::vector<std::string> labels;
  std::size_t          labelled = 0;
  for (auto const &a : agents)
  {
    intervals.push_back(interval_from_json(a));
    if (a.contains("label"))
    {
      if (!a["label"].is_string())
      {
        throw ParseError("agent label must be a string");
      }
      labels.push_back(a["label"].get<std::string>());
      ++labelled;
    }
    else
    {
      labels.emplace_back();
    }
  }
  if (intervals.empty())
  {
    throw ParseError("profile has no agents");
  }
  if (labelled == 0)
  {
    labels.clear();
  }
  else
  {
    if (labelled != intervals.size())
    {
      throw ParseError("either every agent has a label or none does");
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
    {
      throw ParseError("agent labels must be unique");
    }
  }
  return ProfileDocument{Profile::make(std::move(intervals)), std::move(labels)};
}

json profile_to_json(Profile const &s)
{
  return profile_document_to_json(ProfileDocument{s, {}});
}

Profile profile_from_json(json const &j)
{
  return profile_document_from_json(j).profile;
}

json extended_bound_to_json(ExtendedBound b)
{
  switch (b.kind())
  {
  case ExtendedBound::Kind::NegInf:
    return "-inf";
  case ExtendedBound::Kind::PosInf:
    return "inf";
  case ExtendedBound::Kind::Finite:
    break;
  }
  return b.value();
}

ExtendedBound extended_bound_from_json(json const &j)
{
  if (j.is_string())
  {
    auto const s = j.get<std::string>();
    if (s == "-inf")
    {
      return ExtendedBound::neg_inf();
    }
    if (s == "inf" || s == "+inf")
    {
      return ExtendedBound::pos_inf();
    }
    throw ParseError("extended bound must be a number, \"-inf\" or \"inf\", got \"" + s + "\"");
  }
  double const x = number(j, "extended bound");
  if (!std::isfinite(x))
  {
    throw ParseError("extended bound numbers must be finite; use \"-inf\"/\"inf\"");
  }
  return ExtendedBound::finite(x);
}

json phantoms_to_json(PhantomVector const &p)
{
  json arr = json::array();
  for (auto const &ph : p.phantoms)
  {
    arr.push_back(json{{"lo", extended_bound_to_json(ph.lo())}, {"hi", extended_bound_to_json(ph.hi())}});
  }
  return json{{"phantoms", std::move(arr)}};
}

PhantomVector phantoms_from_json(json const &j)
{
  PhantomVector out;
  for (auto const &ph : array_field(j, "phantoms"))
  {
    out.phantoms.push_back(ExtendedInterval::make(extended_bound_from_json(field(ph, "lo")),
                                                  extended_bound_from_json(field(ph, "hi"))));
  }
  return out;
}

json map_to_json(MonotoneMap const &phi)
{
  json bps = json::array();
  for (auto const &bp : phi.breakpoints())
  {
    bps.push_back(json::array({bp.x, bp.y}));
  }
  return json{{"direction", phi.direction() == Direction::Increasing ? "increasing" : "decreasing"},
              {"breakpoints", std::move(bps)},
              {"left_slope", phi.left_slope()},
              {"right_slope", phi.right_slope()}};
}

MonotoneMap map_from_json(json const &j)
{
  json const &dir = field(j, "direction");
  if (!dir.is_string() || (dir != "increasing" && dir != "decreasing"))
  {
    throw ParseError("map direction must be \"increasing\" or \"decreasing\"");
  }
  std::vector<Breakpoint> bps;
  for (auto const &bp : array_field(j, "breakpoints"))
  {
    if (!bp.is_array() || bp.size() != 2)
    {
      throw ParseError("map breakpoints are [x, y] pairs");
    }
    bps.push_back({number(bp[0], "breakpoint x"), number(bp[1], "breakpoint y")});
  }
  try
  {
    return MonotoneMap::make(std::move(bps),
                             dir == "increasing" ? Direction::Increasing : Direction::Decreasing,
                             number_field(j, "left_slope"), number_field(j, "right_slope"));
  }
  catch (std::invalid_argument const &e)
  {
    throw ParseError(std::string("invalid map: ") + e.what());
  }
}

json preference_to_json(Preference const &pref)
{
  json j{{"peak", interval_to_json(pref.peak)}};
  if (auto const *w = std::get_if<WeightedL1>(&pref.kind))
  {
    j["kind"]         = "weighted_l1";
    j["lower_weight"] = w->lower_weight;
    j["upper_weight"] = w->upper_weight;
  }
  else
  {
    j["kind"]      = "penalty";
    j["reference"] = interval_to_json(std::get<Penalty>(pref.kind).reference);
  }
  return j;
}

Preference preference_from_json(json const &j)
{
  Interval const peak = interval_from_json(field(j, "peak"));
  json const    &kind = field(j, "kind");
  if (kind == "weighted_l1")
  {
    try
    {
      return weighted_l1(peak, number_field(j, "lower_weight"), number_field(j, "upper_weight"));
    }
    catch (std::invalid_argument const &e)
    {
      throw ParseError(e.what());
    }
  }
  if (kind == "penalty")
  {
    return penalty(peak, interval_from_json(field(j, "reference")));
  }
  throw ParseError("preference kind must be \"weighted_l1\" or \"penalty\"");
}

json witness_to_json(Witness const &w)
{
  json j = json::object();
  if (w.profile)
  {
    j["profile"] = profile_to_json(*w.profile);
  }
  if (w.other)
  {
    j["other"] = profile_to_json(*w.other);
  }
  if (w.permutation)
  {
    j["permutation"] = *w.permutation;
  }
  if (w.map)
  {
    j["map"] = map_to_json(*w.map);
  }
  if (w.shift)
  {
    j["shift"] = *w.shift;
  }
  if (w.epsilon)
  {
    j["epsilon"] = *w.epsilon;
  }
  if (w.agent)
  {
    j["agent_index"] = *w.agent;
  }
  if (w.misreport)
  {
    j["misreport"] = interval_to_json(*w.misreport);
  }
  if (w.interval)
  {
    j["interval"] = interval_to_json(*w.interval);
  }
  if (w.n)
  {
    j["n"] = *w.n;
  }
  if (w.preference)
  {
    j["preference"] = preference_to_json(*w.preference);
  }
  json outcomes = json::array();
  for (auto const &o : w.outcomes)
  {
    outcomes.push_back(interval_to_json(o));
  }
  j["outcomes"] = std::move(outcomes);
  return j;
}

Witness witness_from_json(json const &j)
{
  if (!j.is_object())
  {
    throw ParseError("witness must be an object");
  }
  Witness w;
  if (j.contains("profile"))
  {
    w.profile = profile_from_json(j["profile"]);
  }
  if (j.contains("other"))
  {
    w.other = profile_from_json(j["other"]);
  }
  if (j.contains("permutation"))
  {
    std::vector<std::size_t> pi;
    for (auto const &k : array_field(j, "permutation"))
    {
      if (!k.is_number_unsigned())
      {
        throw ParseError("permutation entries must be nonnegative integers");
      }
      pi.push_back(k.get<std::size_t>());
    }
    w.permutation = std::move(pi);
  }
  if (j.contains("map"))
  {
    w.map = map_from_json(j["map"]);
  }
  if (j.contains("shift"))
  {
    w.shift = number_field(j, "shift");
  }
  if (j.contains("epsilon"))
  {
    w.epsilon = number_field(j, "epsilon");
  }
  if (j.contains("agent_index"))
  {
    w.agent = index_field(j, "agent_index");
  }
  if (j.contains("misreport"))
  {
    w.misreport = interval_from_json(j["misreport"]);
  }
  if (j.contains("interval"))
  {
    w.interval = interval_from_json(j["interval"]);
  }
  if (j.contains("n"))
  {
    w.n = index_field(j, "n");
  }
  if (j.contains("preference"))
  {
    w.preference = preference_from_json(j["preference"]);
  }
  if (j.contains("outcomes"))
  {
    for (auto const &o : array_field(j, "outcomes"))
    {
      w.outcomes.push_back(interval_from_json(o));
    }
  }
  return w;
}

json audit_report_to_json(AuditReport const &report)
{
  json axioms_cfg = json::array();
  for (AxiomId id : report.config.axioms)
  {
    axioms_cfg.push_back(std::string(axiom_name(id)));
  }
  json tallies = json::array();
  for (auto const &t : report.tallies)
  {
    tallies.push_back(json{
      {"axiom", std::string(axiom_name(t.axiom))},
      {"surrogate", is_surrogate(t.axiom)},
      {"samples", t.samples},
      {"failures", t.failures},
      {"errors", t.errors},
      {"verdict", t.failures == 0 ? "pass" : "fail"},
      {"first_witness", t.first_witness ? witness_to_json(*t.first_witness) : json(nullptr)},
    });
  }
  return json{
    {"rule", report.rule},
    {"seed", report.config.seed},
    {"config",
     {{"n", report.config.n},
      {"samples", report.config.samples},
      {"axioms", std::move(axioms_cfg)},
      {"perturbations", report.config.perturbations},
      {"search_random_samples", report.config.search_random_samples},
      {"max_consecutive_errors", report.config.max_consecutive_errors}}},
    {"compliant", report.compliant()},
    {"aborted", report.aborted},
    {"abort_reason", report.abort_reason},
    {"axioms", std::move(tallies)},
  };
}

AuditReport audit_report_from_json(json const &j)
{
  AuditReport r;
  json const &rule = field(j, "rule");
  if (!rule.is_string())
  {
    throw ParseError("report rule must be a string");
  }
  r.rule = rule.get<std::string>();
  json const &cfg = field(j, "config");
  r.config.seed = field(j, "seed").get<std::uint64_t>();
  r.config.n = index_field(cfg, "n");
  r.config.samples = index_field(cfg, "samples");
  r.config.perturbations = index_field(cfg, "perturbations");
  r.config.search_random_samples = index_field(cfg, "search_random_samples");
  r.config.max_consecutive_errors = index_field(cfg, "max_consecutive_errors");
  r.config.axioms.clear();
  auto axiom_of = [](json const &name) {
    if (!name.is_string())
    {
      throw ParseError("axiom ids are strings");
    }
    auto id = parse_axiom(name.get<std::string>());
    if (!id)
    {
      throw ParseError("unknown axiom id \"" + name.get<std::string>() + "\"");
    }
    return *id;
  };
  for (auto const &name : array_field(cfg, "axioms"))
  {
    r.config.axioms.push_back(axiom_of(name));
  }
  r.aborted      = field(j, "aborted").get<bool>();
  r.abort_reason = field(j, "abort_reason").get<std::string>();
  for (auto const &t : array_field(j, "axioms"))
  {
    AxiomTally tally{axiom_of(field(t, "axiom"))};
    tally.samples  = index_field(t, "samples");
    tally.failures = index_field(t, "failures");
    tally.errors   = index_field(t, "errors");
    json const &w  = field(t, "first_witness");
    if (!w.is_null())
    {
      tally.first_witness = witness_from_json(w);
    }
    r.tallies.push_back(std::move(tally));
  }
  return r;
}

json read_json_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ParseError("cannot open " + path.string());
  }
  try
  {
    return json::parse(in);
  }
  catch (json::exception const &e)
  {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace ivagg
