#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "runnerlab/rational.hpp"

namespace runnerlab {

// Distance from a rational point to the nearest integer; always in [0, 1/2].
class TorusDistance {
 public:
  explicit TorusDistance(Rational v);
  const Rational& value() const { return value_; }
  bool operator==(const TorusDistance& o) const { return value_ == o.value_; }
  bool operator<(const TorusDistance& o) const { return value_ < o.value_; }

 private:
  Rational value_;
};

TorusDistance torus_norm(const Rational& x);

// The runners' speeds: strictly increasing distinct positive integers.
class SpeedSet {
 public:
  // Sorts the input; rejects nonpositive entries, duplicates, and emptiness
  // (duplicates are an error rather than a silent merge so callers learn
  // their input was malformed).
  static SpeedSet validate(std::span<const std::int64_t> raw);
  static SpeedSet validate(std::initializer_list<std::int64_t> raw);

  const std::vector<std::int64_t>& speeds() const { return speeds_; }
  std::size_t size() const { return speeds_.size(); }
  std::int64_t max() const { return speeds_.back(); }
  std::int64_t operator[](std::size_t i) const { return speeds_[i]; }
  bool contains(std::int64_t v) const;
  bool all_odd() const;

  SpeedSet dilated(std::int64_t lambda) const;
  // Divides out the gcd of all speeds; ML is invariant under dilation, but
  // normalization is explicit so it stays visible in traces.
  std::pair<SpeedSet, std::int64_t> normalized() const;

  bool operator==(const SpeedSet& o) const { return speeds_ == o.speeds_; }
  std::string to_string() const;

 private:
  explicit SpeedSet(std::vector<std::int64_t> sorted) : speeds_(std::move(sorted)) {}
  std::vector<std::int64_t> speeds_;
};

SpeedSet validate_speed_set(std::span<const std::int64_t> raw);

}  // namespace runnerlab
