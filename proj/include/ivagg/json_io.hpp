#pragma once

#include "ivagg/audit.hpp"
#include "ivagg/interval.hpp"
#include "ivagg/preferences.hpp"
#include "ivagg/rules.hpp"
#include "ivagg/transforms.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace ivagg {

/// Profile plus optional per-agent labels (empty, or one unique label per agent).
struct ProfileDocument
{
  Profile                  profile;
  std::vector<std::string> labels;
};

/// Shortest decimal that round-trips; integral values print without a
/// fraction ("2", not "2.0").
std::string format_number(double x);
/// {"lo":2,"hi":5}
std::string format_interval_json(Interval const &a);
/// (2, 5)
std::string format_interval(Interval const &a);

// All from_json functions throw ParseError on malformed input and
// InvalidInterval when the numbers do not form valid intervals.

nlohmann::json  interval_to_json(Interval const &a);
Interval        interval_from_json(nlohmann::json const &j);

/// {"agents":[{"lo":2,"hi":4,"label":"a"}, ...]}
nlohmann::json  profile_document_to_json(ProfileDocument const &doc);
ProfileDocument profile_document_from_json(nlohmann::json const &j);
nlohmann::json  profile_to_json(Profile const &s);
Profile         profile_from_json(nlohmann::json const &j);

/// Number, or the strings "-inf" / "inf".
nlohmann::json  extended_bound_to_json(ExtendedBound b);
ExtendedBound   extended_bound_from_json(nlohmann::json const &j);

/// {"phantoms":[{"lo":"inf","hi":"inf"}, ...]}
nlohmann::json  phantoms_to_json(PhantomVector const &p);
PhantomVector   phantoms_from_json(nlohmann::json const &j);

/// {"direction":"increasing","breakpoints":[[x,y],...],"left_slope":s,"right_slope":s}
nlohmann::json  map_to_json(MonotoneMap const &phi);
MonotoneMap     map_from_json(nlohmann::json const &j);

/// {"peak":{...},"kind":"weighted_l1","lower_weight":a,"upper_weight":b}
/// or {"peak":{...},"kind":"penalty","reference":{...}}
nlohmann::json  preference_to_json(Preference const &pref);
Preference      preference_from_json(nlohmann::json const &j);

nlohmann::json  witness_to_json(Witness const &w);
Witness         witness_from_json(nlohmann::json const &j);

nlohmann::json  audit_report_to_json(AuditReport const &report);
AuditReport     audit_report_from_json(nlohmann::json const &j);

/// Reads and parses a JSON file; throws ParseError with the path on failure.
nlohmann::json  read_json_file(std::filesystem::path const &path);

}  // namespace ivagg
