#pragma once

// Deliberately broken rules that each violate one axiom.

#include "ivagg/interval.hpp"
#include "ivagg/rules.hpp"

#include <algorithm>

namespace ivagg::foil {

/// Returns the first agent's interval.
inline RuleHandle dictator()
{
  return {"dictator", [](Profile const &s) { return s[0]; }, std::nullopt};
}

/// Median with outputs clamped below 100, so large shifts break translation.
inline RuleHandle clamped_median()
{
  return {"clamped-median",
          [](Profile const &s) {
            Interval const m = median_rule(s);
            return Interval::make(std::min(m.lo(), 99.0), std::min(m.hi(), 100.0));
          },
          std::nullopt};
}

/// Jumps between two constants depending on the sign of the first lower endpoint.
inline RuleHandle jump()
{
  return {"jump",
          [](Profile const &s) { return s[0].lo() < 0 ? Interval::make(0, 1) : Interval::make(5, 6); },
          std::nullopt};
}

/// The widest interval wins (first one on ties): depends on widths, not endpoints alone.
inline RuleHandle widest()
{
  return {"widest",
          [](Profile const &s) {
            Interval best = s[0];
            for (auto const &a : s)
            {
              if (a.hi() - a.lo() > best.hi() - best.lo())
              {
                best = a;
              }
            }
            return best;
          },
          std::nullopt};
}

inline RuleHandle constant()
{
  return {"constant", [](Profile const &) { return Interval::make(0, 1); }, std::nullopt};
}

}  // namespace ivagg::foil
