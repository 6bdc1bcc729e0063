#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pseudoline {

enum class ErrorCode {
  WrongLength,
  PairCrossesTwice,
  PositionOutOfRange,
  TooFewLines,
  UnknownLine,
  MalformedHeader,
  MalformedBody,
  WrongResidue,
  UnknownSeed,
  SeedFailsBound,
  SeedUnavailable,
  HypothesisNotMet,
  ConstructionSelfCheckFailed,
  StageFailedBound,
  NotATriangle,
  FeasibilityCeilingExceeded,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pseudoline
