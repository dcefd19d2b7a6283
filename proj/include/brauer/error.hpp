#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

// Each kind maps to a distinct CLI exit status.
enum class ErrorKind {
  Config = 2,
  CapExceeded = 3,
  MathPrecondition = 4,
  ModelTableGap = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what)
      : Error(ErrorKind::CapExceeded, what) {}
};

struct MathError : Error {
  explicit MathError(const std::string& what)
      : Error(ErrorKind::MathPrecondition, what) {}
};

struct ModelTableGap : Error {
  explicit ModelTableGap(const std::string& what)
      : Error(ErrorKind::ModelTableGap, what) {}
};

/// Trial division could not finish below the configured bound. Callers that
/// only need one prime should fall back to ord_p.
struct FactorBoundExceeded : MathError {
  explicit FactorBoundExceeded(const std::string& what) : MathError(what) {}
};

}  // namespace brauer
