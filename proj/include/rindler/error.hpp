#pragma once

#include <stdexcept>
#include <string>

namespace rindler {

enum class ErrorCode {
  InvalidParams,
  NonConvergence,
  CoincidentPoints,
  ZeroLag,
  MissingCutoff,
  DomainError,
  UnsupportedSpectrum,
  TrajectoryExitsDomain,
  Inadmissible,
  NoAdmissiblePoint,
  BandTooNarrow,
  Config,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace rindler
