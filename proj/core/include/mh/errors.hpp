#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mh {

/// Base class of all errors raised by the engine for bad input or
/// exceeded resource bounds. Internal defects use std::logic_error.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A configured size bound (group order, class count, space size) was hit.
class BoundExceeded : public Error
{
public:
  using Error::Error;
};

/// A precondition on the arguments does not hold.
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// The given subgroup is not normal where normality is required.
class NotNormal : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  ParseError(std::size_t line, std::string const &what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line)
  {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace mh
