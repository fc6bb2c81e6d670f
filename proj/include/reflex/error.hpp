#pragma once

#include <stdexcept>
#include <string>

namespace reflex {

enum class ErrorCode {
  ZeroVector,
  NotPrimitive,
  NotFullDimensional,
  DimensionMismatch,
  OriginNotInterior,
  NotFano,
  NotReflexive,
  NotOnBoundary,
  NotVertex,
  NotBoundary,
  WrongClass,
  NotSimplicial,
  NotSimplexFacet,
  WrongDimension,
  NotCentrallySymmetric,
  NotCanonical,
  NotLattice,
  UnknownName,
  Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace reflex
