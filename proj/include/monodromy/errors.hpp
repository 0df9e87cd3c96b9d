#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace monodromy {

// Error categories map onto the CLI exit-code contract:
// parse failure -> 1, domain validation failure -> 2, internal assertion -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

// Carries a short machine-readable reason code next to the human message,
// e.g. "product-not-identity" or "not-transitive".
struct ValidationError : Error {
  ValidationError(std::string reason_code, const std::string& message)
      : Error(reason_code + ": " + message), code(std::move(reason_code)) {}
  std::string code;
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace monodromy
