#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fwb {

// Malformed group spec, element JSON or selector.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what), position_(0) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A well-formed spec with an unusable parameter, e.g. Dic6.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Group or lattice larger than the configured order cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's contract: non-normal subgroup, element of
// the wrong group, K not contained in H, ...
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal cross-check failed. Seeing one of these means a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fwb
