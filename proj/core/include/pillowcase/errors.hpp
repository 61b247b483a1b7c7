#pragma once

#include <stdexcept>
#include <string>

namespace pillowcase {

/// Bad user input (malformed spec, invalid tuple, inconsistent turns). CLI exit code 1.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// A request exceeds a configured bound (group too large, search cap too high). CLI exit code 1.
struct CapabilityError : std::runtime_error {
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its mathematical domain (e.g. triangle data
/// of a degenerate form).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree disagreed. Signals a bug, not bad input. CLI exit code 2.
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pillowcase
