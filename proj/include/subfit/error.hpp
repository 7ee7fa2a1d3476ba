#pragma once

#include <stdexcept>
#include <string>

namespace subfit {

enum class Errc {
  InvalidInput,
  CycleDetected,
  MissingTop,
  MissingBottom,
  NotComparable,
  NotDistributive,
  PreconditionViolated,
  NotAnEmbedding,
  ConditionsNotMet,
  PropertyCheckFailed,
  NotInFamily,
  NotOpen,
  BadInclusion,
};

const char* errc_name(Errc c);

/// All library errors carry a code so callers (CLI, tests) can dispatch
/// without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace subfit
