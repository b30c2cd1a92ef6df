#pragma once

#include <stdexcept>

namespace ivagg {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An interval that is empty, inverted, or has a non-finite endpoint.
class InvalidInterval : public Error
{
public:
  using Error::Error;
};

/// Rule parameters that do not fit the profile size (quotas, phantom counts, arity).
class RuleParameterError : public Error
{
public:
  using Error::Error;
};

/// Malformed input document or command-line value.
class ParseError : public Error
{
public:
  using Error::Error;
};

/// A rule failed to produce an interval (external process crashed, timed out, printed garbage).
class RuleEvaluationError : public Error
{
public:
  using Error::Error;
};

}  // namespace ivagg
