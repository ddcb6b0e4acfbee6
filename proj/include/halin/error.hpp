#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace halin {

// One code per error class. The CLI maps these 1:1 onto exit codes.
enum class ErrorCode {
  BadConfig = 1,
  PreconditionViolated,
  TooLarge,
  NotAdjacent,
  VertexRepetition,
  EdgeNotOnRay,
  OracleInconsistent,
  OracleBroke,
  BudgetTooSmall,
  FuelExhausted,
  DiscardExhausted,
  NoEqualLabelPair,
  NotAForest,
  InstanceContract,
  KindMismatch,
  MalformedImage,
  NotLocallyFinite,
  FamilyNotDisjoint,
  InsufficientRays,
  ScriptViolation,
  DeciderTimeout,
  UnknownName,
  IoFailure,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace halin
