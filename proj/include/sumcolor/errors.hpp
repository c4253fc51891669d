#pragma once

#include <stdexcept>
#include <string>

namespace sumcolor {

/// Malformed graph or coloring input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an input outside its contract
/// (non-regular graph for the regular pipeline, violated dominance, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced a result that failed its own audit. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sumcolor
