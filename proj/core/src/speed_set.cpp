#include "runnerlab/speed_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "runnerlab/errors.hpp"

namespace runnerlab {

TorusDistance::TorusDistance(Rational v) : value_(std::move(v)) {
  if (value_ < Rational(0) || value_ > Rational(1, 2))
    throw std::domain_error("TorusDistance outside [0, 1/2]");
}

TorusDistance torus_norm(const Rational& x) {
  Rational f = x.frac();
  return TorusDistance(min(f, Rational(1) - f));
}

SpeedSet SpeedSet::validate(std::span<const std::int64_t> raw) {
  if (raw.empty()) fail(Errc::EmptySet, "speed set must be nonempty");
  std::vector<std::int64_t> v(raw.begin(), raw.end());
  std::sort(v.begin(), v.end());
  if (v.front() <= 0)
    fail(Errc::NonPositiveSpeed, "speed " + std::to_string(v.front()) + " is not positive");
  auto dup = std::adjacent_find(v.begin(), v.end());
  if (dup != v.end())
    fail(Errc::DuplicateSpeed, "speed " + std::to_string(*dup) + " appears twice");
  return SpeedSet(std::move(v));
}

SpeedSet SpeedSet::validate(std::initializer_list<std::int64_t> raw) {
  return validate(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

bool SpeedSet::contains(std::int64_t v) const {
  return std::binary_search(speeds_.begin(), speeds_.end(), v);
}

bool SpeedSet::all_odd() const {
  return std::all_of(speeds_.begin(), speeds_.end(), [](std::int64_t v) { return v % 2 != 0; });
}

SpeedSet SpeedSet::dilated(std::int64_t lambda) const {
  if (lambda <= 0) throw std::domain_error("dilation factor must be positive");
  std::vector<std::int64_t> v(speeds_);
  for (auto& x : v) x *= lambda;
  return SpeedSet(std::move(v));
}

std::pair<SpeedSet, std::int64_t> SpeedSet::normalized() const {
  std::int64_t g = 0;
  for (auto v : speeds_) g = std::gcd(g, v);
  std::vector<std::int64_t> v(speeds_);
  for (auto& x : v) x /= g;
  return {SpeedSet(std::move(v)), g};
}

std::string SpeedSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < speeds_.size(); ++i) {
    if (i) os << ',';
    os << speeds_[i];
  }
  os << '}';
  return os.str();
}

SpeedSet validate_speed_set(std::span<const std::int64_t> raw) { return SpeedSet::validate(raw); }

const char* to_string(Errc c) noexcept {
  switch (c) {
    case Errc::NonPositiveSpeed: return "NonPositiveSpeed";
    case Errc::DuplicateSpeed: return "DuplicateSpeed";
    case Errc::EmptySet: return "EmptySet";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotDissociated: return "NotDissociated";
    case Errc::NotPrime: return "NotPrime";
    case Errc::PrimeDividesSpeed: return "PrimeDividesSpeed";
    case Errc::NoPrimeFound: return "NoPrimeFound";
    case Errc::Undecided: return "Undecided";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::IntervalViolation: return "IntervalViolation";
    case Errc::CollisionToMultiset: return "CollisionToMultiset";
    case Errc::PrimeSearchFailed: return "PrimeSearchFailed";
    case Errc::NotASunflower: return "NotASunflower";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace runnerlab
