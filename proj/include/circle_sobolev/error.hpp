#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circle_sobolev {

enum class Errc {
  InvalidArgument,
  BandExceedsGrid,
  ResolutionTooLow,
  GridMismatch,
  NotReachedAtTruncation,
  NoConvergence,
  StarConditionViolated,
  NotRealValued,
  ParseError,
  ConfigInvalid,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::BandExceedsGrid: return "BandExceedsGrid";
    case Errc::ResolutionTooLow: return "ResolutionTooLow";
    case Errc::GridMismatch: return "GridMismatch";
    case Errc::NotReachedAtTruncation: return "NotReachedAtTruncation";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::StarConditionViolated: return "StarConditionViolated";
    case Errc::NotRealValued: return "NotRealValued";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigInvalid: return "ConfigInvalid";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc tags so the CLI
/// can report the module error by name.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace circle_sobolev
