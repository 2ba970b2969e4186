#pragma once

#include <stdexcept>
#include <string>

namespace swipt {

enum class ErrorCode {
  kDomain = 1,       // argument outside the documented domain
  kSaturation,       // logistic rectifier asked for output at or above its ceiling
  kNoInverse,        // conversion function is identically zero
  kBracket,          // root finder got an interval without a sign change
  kEvaluation,       // NaN from a user-supplied function
  kSingular,         // 2x2 system is singular / solution not unique
  kInfeasible,       // empty feasible set
  kParse,            // configuration ingestion failure
  kIo,
  kInternal,         // internal consistency check failed
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace swipt
