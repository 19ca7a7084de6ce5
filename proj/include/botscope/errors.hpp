#pragma once

#include <stdexcept>
#include <string>

namespace botscope {

// Exit codes used by the CLI: 0 success, 1 usage, 2 data, 3 environment.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_data = 2;
inline constexpr int exit_env = 3;

/// Malformed or inconsistent input data (bad manifest rows, self-loops,
/// unparseable edge lists, undefined metrics).
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller violated an API precondition (unknown vertex, column mismatch,
/// empty input where rows are required).
class argument_error : public std::runtime_error {
 public:
  explicit argument_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem or OS level failure (unreadable file, unwritable directory).
class environment_error : public std::runtime_error {
 public:
  explicit environment_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A metric that has no defined value for the given input, e.g. AUC on
/// single-class labels.
class undefined_metric_error : public data_error {
 public:
  explicit undefined_metric_error(const std::string& msg) : data_error(msg) {}
};

}  // namespace botscope
