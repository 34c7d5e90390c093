#pragma once

#include <stdexcept>
#include <string>

namespace aqoci {

enum class ErrorKind {
  dimension,
  oracle_size,
  range,
  layout,
  unsupported_degree,
  decode,
  configuration,
  parse,
  io,
  solver,
  remote_http,
  malformed_body,
  energy_mismatch,
  undefined_metric,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// CLI exit status for an error: 2 configuration, 3 solver/remote, 4 I/O.
int exit_code(ErrorKind kind) noexcept;

}  // namespace aqoci
