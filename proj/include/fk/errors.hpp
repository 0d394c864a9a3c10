#pragma once

#include <stdexcept>
#include <string>

namespace fk {

// Every failure the library can report, one code per condition.
enum class Err {
  AllConstant,
  ZeroFrequency,
  NotCoprime,
  TooFewSamples,
  NotClosed,
  NotEmbedded,
  NoGenericProjection,
  NonGenericProjection,
  UnknownCrossing,
  NotAKnot,
  NotTwoComponents,
  OddSignSum,
  MalformedPD,
  InconsistentArcs,
  MalformedInput,
  Io,
  Internal,
};

const char* err_name(Err e);

class KnotError : public std::runtime_error {
 public:
  KnotError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string& what) {
  throw KnotError(code, what);
}

inline void require(bool cond, Err code, const std::string& what) {
  if (!cond) raise(code, what);
}

}  // namespace fk
