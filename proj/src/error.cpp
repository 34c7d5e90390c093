#include "aqoci/error.hpp"

namespace aqoci {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension: return "dimension error";
    case ErrorKind::oracle_size: return "oracle-size error";
    case ErrorKind::range: return "range error";
    case ErrorKind::layout: return "layout error";
    case ErrorKind::unsupported_degree: return "unsupported-degree error";
    case ErrorKind::decode: return "decode error";
    case ErrorKind::configuration: return "configuration error";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::io: return "I/O error";
    case ErrorKind::solver: return "solver error";
    case ErrorKind::remote_http: return "remote HTTP error";
    case ErrorKind::malformed_body: return "malformed-body error";
    case ErrorKind::energy_mismatch: return "energy-mismatch error";
    case ErrorKind::undefined_metric: return "undefined-metric error";
  }
  return "error";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::solver:
    case ErrorKind::remote_http:
    case ErrorKind::malformed_body:
    case ErrorKind::energy_mismatch:
      return 3;
    case ErrorKind::io:
    case ErrorKind::parse:
      return 4;
    default:
      return 2;
  }
}

}  // namespace aqoci
