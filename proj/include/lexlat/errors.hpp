#pragma once

#include <stdexcept>
#include <string>

namespace lexlat {

// Typed domain errors. The CLI prints err_name(kind) as the first output
// token and exits 1; usage errors are handled separately (exit 2).
enum class Err {
  UnknownElement,
  NotAPartialOrder,
  NotAForest,
  NotFinite,
  PosetMismatch,
  PreconditionViolated,
  ZeroElement,
  NotUpperSet,
  TooLarge,
  EmptyPoset,
  ExponentNotInS,
  SignUndecided,
  NotInM0,
  UnknownFamily,
  InconsistentOracle,
  ParseError,
};

const char* err_name(Err kind);

class DomainError : public std::runtime_error {
 public:
  DomainError(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}

  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) {
  throw DomainError(kind, msg);
}

inline void require(bool cond, Err kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace lexlat
