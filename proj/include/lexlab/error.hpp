#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexlab {

/// Caller handed us something outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input could not be parsed. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An engine limit was hit or a probabilistic step failed (caps, unlucky coordinates).
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked internal invariant failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lexlab
