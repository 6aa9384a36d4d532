#include "lexlat/errors.hpp"

namespace lexlat {

const char* err_name(Err kind) {
  switch (kind) {
    case Err::UnknownElement:
      return "UnknownElement";
    case Err::NotAPartialOrder:
      return "NotAPartialOrder";
    case Err::NotAForest:
      return "NotAForest";
    case Err::NotFinite:
      return "NotFinite";
    case Err::PosetMismatch:
      return "PosetMismatch";
    case Err::PreconditionViolated:
      return "PreconditionViolated";
    case Err::ZeroElement:
      return "ZeroElement";
    case Err::NotUpperSet:
      return "NotUpperSet";
    case Err::TooLarge:
      return "TooLarge";
    case Err::EmptyPoset:
      return "EmptyPoset";
    case Err::ExponentNotInS:
      return "ExponentNotInS";
    case Err::SignUndecided:
      return "SignUndecided";
    case Err::NotInM0:
      return "NotInM0";
    case Err::UnknownFamily:
      return "UnknownFamily";
    case Err::InconsistentOracle:
      return "InconsistentOracle";
    case Err::ParseError:
      return "ParseError";
  }
  return "UnknownError";
}

}  // namespace lexlat
