#pragma once

#include "ivagg/interval.hpp"
#include "ivagg/rules.hpp"

#include <chrono>
#include <string>

namespace ivagg {

inline constexpr std::chrono::milliseconds kDefaultExternTimeout{5000};

/// Runs `command` through /bin/sh once: writes the profile as a
/// ProfileDocument to its stdin and parses {"lo":..,"hi":..} from its stdout.
/// Throws RuleEvaluationError on spawn failure, non-zero exit, timeout or
/// malformed output.
Interval run_extern_rule(std::string const &command, Profile const &s,
                         std::chrono::milliseconds timeout = kDefaultExternTimeout);

/// RuleHandle that spawns one process per evaluation. Calls are serialized
/// per handle.
RuleHandle extern_rule_adapter(std::string command,
                               std::chrono::milliseconds timeout = kDefaultExternTimeout);

}  // namespace ivagg
