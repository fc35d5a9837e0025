#include "photodissim/error.hpp"

namespace photodissim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPhysicalState: return "NonPhysicalState";
    case ErrorCode::NonRealExpectation: return "NonRealExpectation";
    case ErrorCode::DegenerateHamiltonian: return "DegenerateHamiltonian";
    case ErrorCode::SingularGauge: return "SingularGauge";
    case ErrorCode::DissipationNotZero: return "DissipationNotZero";
    case ErrorCode::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorCode::ResonantDenominator: return "ResonantDenominator";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::NonUniformGrid: return "NonUniformGrid";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::InsufficientPeaks: return "InsufficientPeaks";
    case ErrorCode::TooFewExtrema: return "TooFewExtrema";
    case ErrorCode::MissingKey: return "MissingKey";
    case ErrorCode::BadValue: return "BadValue";
    case ErrorCode::NonCPDissipation: return "NonCPDissipation";
    case ErrorCode::BadAxis: return "BadAxis";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

ErrorCategory category(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingKey:
    case ErrorCode::BadValue:
    case ErrorCode::NonCPDissipation:
    case ErrorCode::BadAxis:
    case ErrorCode::InvalidSpec:
    case ErrorCode::Io:
      return ErrorCategory::Config;
    case ErrorCode::NonPhysicalState:
    case ErrorCode::DegenerateHamiltonian:
    case ErrorCode::SingularGauge:
    case ErrorCode::DissipationNotZero:
    case ErrorCode::UnsupportedRegime:
    case ErrorCode::ResonantDenominator:
      return ErrorCategory::Regime;
    default:
      return ErrorCategory::Numerical;
  }
}

int exit_code(ErrorCategory cat) {
  switch (cat) {
    case ErrorCategory::Config: return 2;
    case ErrorCategory::Regime: return 3;
    case ErrorCategory::Numerical: return 4;
  }
  return 1;
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

}  // namespace photodissim
