#pragma once

#include <stdexcept>
#include <string>

namespace fhr {

enum class ErrorKind {
  invalid_interval,
  invalid_nodes,
  invalid_samples,
  degree_out_of_range,
  extension_out_of_range,
  evaluation_at_endpoint,
  non_finite_input,
  singular_at_node,
  index_out_of_range,
  too_few_nodes,
  parse_error,
};

const char* to_string(ErrorKind kind) noexcept;

/// Thrown for every precondition violation in the library. The message is a
/// single line suitable for a command-line diagnostic.
class Error : public std::invalid_argument {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::invalid_argument(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fhr
