#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twobridge {

enum class ErrorCode {
  EmptyWord,
  NonPositiveEntry,
  MalformedSyntax,
  ImproperInput,
  UnknownRegionLabel,
  TooManyCrossings,
  NotAKnot,
  NotTrivializing,
  OddSum,
  FamilyMismatch,
  UnorientedComponent,
  Overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace twobridge
