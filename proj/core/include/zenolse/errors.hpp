#pragma once

#include <stdexcept>
#include <string>

namespace zenolse {

/// Invalid user input: bad config files, bad grid/window/schedule parameters,
/// non-commensurate time intervals. Maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Runtime numerical failure: non-finite field values, lost state under
/// projection, out-of-validity closed-form evaluation. Maps to CLI exit code 2.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zenolse
