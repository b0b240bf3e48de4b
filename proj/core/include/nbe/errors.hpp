#pragma once

#include <stdexcept>
#include <string>

namespace nbe {

/// Invalid or inconsistent specification input (maps to CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation that cannot produce a result for the given parameters,
/// e.g. a mass constraint that no cover can reach (CLI exit code 3).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant, e.g. a duality gap beyond its contract
/// (CLI exit code 4). Always a bug or a numeric breakdown, never user error.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nbe
