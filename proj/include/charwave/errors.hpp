#pragma once

#include <stdexcept>
#include <string>

namespace charwave {

// Stable process exit codes (CLI contract).
enum class ExitCode : int {
  Ok = 0,
  Config = 2,          // malformed or out-of-range configuration
  Invariant = 3,       // a numerical invariant or precondition was violated
  NonConvergence = 4,  // fixed-point iteration failed to converge
  Io = 5,              // filesystem failure
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

// Configuration problems carry a JSON-pointer-style path to the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string pointer, const std::string& what)
      : Error(ExitCode::Config, pointer + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

struct QuadratureError : Error {
  explicit QuadratureError(const std::string& what) : Error(ExitCode::Invariant, what) {}
};
struct InvariantError : Error {
  explicit InvariantError(const std::string& what) : Error(ExitCode::Invariant, what) {}
};
struct FixedPointDivergenceError : Error {
  explicit FixedPointDivergenceError(const std::string& what)
      : Error(ExitCode::NonConvergence, what) {}
};
struct CompatibilityError : Error {
  explicit CompatibilityError(const std::string& what) : Error(ExitCode::Invariant, what) {}
};
struct PreBlowupOnlyError : Error {
  explicit PreBlowupOnlyError(const std::string& what) : Error(ExitCode::Invariant, what) {}
};
struct StabilityError : Error {
  explicit StabilityError(const std::string& what) : Error(ExitCode::Invariant, what) {}
};
struct NotApplicableError : Error {
  explicit NotApplicableError(const std::string& what) : Error(ExitCode::Invariant, what) {}
};
struct WindowError : Error {
  explicit WindowError(const std::string& what) : Error(ExitCode::Invariant, what) {}
};
struct DegenerateSamplesError : Error {
  explicit DegenerateSamplesError(const std::string& what) : Error(ExitCode::Invariant, what) {}
};
struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ExitCode::Io, what) {}
};

}  // namespace charwave
