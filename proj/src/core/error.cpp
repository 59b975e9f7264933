#include "fhr/error.hpp"

namespace fhr {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_interval: return "invalid-interval";
    case ErrorKind::invalid_nodes: return "invalid-nodes";
    case ErrorKind::invalid_samples: return "invalid-samples";
    case ErrorKind::degree_out_of_range: return "degree-out-of-range";
    case ErrorKind::extension_out_of_range: return "extension-out-of-range";
    case ErrorKind::evaluation_at_endpoint: return "evaluation-at-endpoint";
    case ErrorKind::non_finite_input: return "non-finite-input";
    case ErrorKind::singular_at_node: return "singular-at-node";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::too_few_nodes: return "too-few-nodes";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace fhr
