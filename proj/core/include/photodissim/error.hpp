#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace photodissim {

enum class ErrorCode {
  // state model
  NonPhysicalState,
  NonRealExpectation,
  // hamiltonian / regime
  DegenerateHamiltonian,
  SingularGauge,
  DissipationNotZero,
  UnsupportedRegime,
  ResonantDenominator,
  // numerics
  InvalidSpec,
  StepTooLarge,
  ProbabilityOutOfRange,
  NonUniformGrid,
  TooFewSamples,
  InsufficientPeaks,
  TooFewExtrema,
  // configuration
  MissingKey,
  BadValue,
  NonCPDissipation,
  BadAxis,
  Io,
};

/// Coarse classification used for process exit codes.
enum class ErrorCategory { Config, Regime, Numerical };

std::string_view to_string(ErrorCode code);
ErrorCategory category(ErrorCode code);

/// Exit code for the command line tool: 2 config, 3 physics regime, 4 numerical.
int exit_code(ErrorCategory cat);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return photodissim::category(code_); }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }
  /// Same code, message prefixed with `context: `.
  Error with_context(const std::string& context) const { return Error(code_, context + ": " + detail_); }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace photodissim
