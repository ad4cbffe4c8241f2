#pragma once

#include <stdexcept>
#include <string>

namespace weylinv {

/// Caller violated a structural precondition (ring mismatch, unmapped
/// variable, bad exponent, invalid prime, ...).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// A safety cap (group size, exponent width, term budget) was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical claim failed to verify where the caller required it.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weylinv
