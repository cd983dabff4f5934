#include "rindler/error.hpp"

namespace rindler {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "invalid-params";
    case ErrorCode::NonConvergence: return "non-convergence";
    case ErrorCode::CoincidentPoints: return "coincident-points";
    case ErrorCode::ZeroLag: return "zero-lag";
    case ErrorCode::MissingCutoff: return "missing-cutoff";
    case ErrorCode::DomainError: return "domain-error";
    case ErrorCode::UnsupportedSpectrum: return "unsupported-spectrum";
    case ErrorCode::TrajectoryExitsDomain: return "trajectory-exits-domain";
    case ErrorCode::Inadmissible: return "inadmissible-parameters";
    case ErrorCode::NoAdmissiblePoint: return "no-admissible-point";
    case ErrorCode::BandTooNarrow: return "band-too-narrow";
    case ErrorCode::Config: return "config-error";
    case ErrorCode::Io: return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace rindler
