#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace kneser {

/// An argument is outside the operation's domain (bad probability, mismatched
/// vertex sets, invalid cover passed where a valid one is required, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set representation violates a structural precondition of its mode.
class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact solver refused an instance above its size guard.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of a validation: either valid, or the first violation found.
struct Report {
  bool valid = true;
  std::string reason;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> pair;

  static Report ok() { return {}; }
  static Report fail(std::string reason) { return {false, std::move(reason), std::nullopt}; }
  static Report fail(std::string reason, std::uint32_t u, std::uint32_t v) {
    return {false, std::move(reason), std::make_pair(u, v)};
  }

  explicit operator bool() const { return valid; }
};

}  // namespace kneser
