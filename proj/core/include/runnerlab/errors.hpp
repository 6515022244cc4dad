#pragma once

#include <stdexcept>
#include <string>

namespace runnerlab {

enum class Errc {
  NonPositiveSpeed,
  DuplicateSpeed,
  EmptySet,
  BudgetExceeded,
  NotDissociated,
  NotPrime,
  PrimeDividesSpeed,
  NoPrimeFound,
  Undecided,
  DimensionTooLarge,
  IntervalViolation,
  CollisionToMultiset,
  PrimeSearchFailed,
  NotASunflower,
  ParseError,
};

const char* to_string(Errc) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace runnerlab
