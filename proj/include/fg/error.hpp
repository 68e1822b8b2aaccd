#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fg {

enum class Errc {
  NotPrime,
  Unsupported,
  DivisionByZero,
  NotSquareOrder,
  Guard,
  FormInconsistent,
  TypeMismatch,
  Precondition,
  UnsupportedFamily,
  SignError,
  BadPartition,
  PreconditionSize,
  GuardCubic,
  NonIntegralK,
  EpsilonRange,
  GammaRange,
  DomainError,
  EmptySet,
  Parse,
  Schema,
};

std::string_view errc_name(Errc c);

// Every library failure is reported through this type; the code lets callers
// (the CLI in particular) tell guards apart from genuine misuse.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  bool is_guard() const noexcept { return code_ == Errc::Guard || code_ == Errc::Unsupported; }

 private:
  Errc code_;
};

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace fg
