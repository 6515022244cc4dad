#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "runnerlab/rational.hpp"

namespace runnerlab {

// Significand bits for directed-rounding evaluation of transcendental
// quantities. Comparisons that stay undecided are retried with doubled
// precision up to `cap_bits`.
struct Precision {
  unsigned bits = 128;
  unsigned cap_bits = 4096;
  Precision doubled() const { return {bits * 2 > cap_bits ? cap_bits : bits * 2, cap_bits}; }
  bool at_cap() const { return bits >= cap_bits; }
};

// A real carried as an enclosure [lo, hi]: every operation rounds outward,
// so the true value never escapes. center/radius are the presentation view.
class BoundedReal {
 public:
  BoundedReal();  // exact zero
  BoundedReal(const BoundedReal&);
  BoundedReal(BoundedReal&&) noexcept;
  BoundedReal& operator=(const BoundedReal&);
  BoundedReal& operator=(BoundedReal&&) noexcept;
  ~BoundedReal();

  static BoundedReal exact_zero() { return BoundedReal(); }
  static BoundedReal from_rational(const Rational& q, Precision prec);
  static BoundedReal from_rational_endpoints(const Rational& lo, const Rational& hi,
                                             Precision prec);
  static BoundedReal from_int(std::int64_t n, Precision prec);
  static BoundedReal pi(Precision prec);

  BoundedReal operator+(const BoundedReal&) const;
  BoundedReal operator-(const BoundedReal&) const;
  BoundedReal operator*(const BoundedReal&) const;
  BoundedReal operator-() const;
  BoundedReal& operator+=(const BoundedReal& o) { *this = *this + o; return *this; }

  // Division requires a sign-definite denominator.
  BoundedReal div(const BoundedReal& den) const;

  BoundedReal mul_rational(const Rational& q) const;
  BoundedReal add_rational(const Rational& q) const;
  BoundedReal abs() const;

  // sin/cos propagate through the 1-Lipschitz bound around the midpoint;
  // acos uses monotonicity. acos clamps its operand to [-1, 1] (the caller
  // guarantees the true value is in the domain).
  BoundedReal sin() const;
  BoundedReal cos() const;
  BoundedReal acos() const;

  // Intersection of two enclosures of the same value; throws if disjoint.
  BoundedReal intersect(const BoundedReal& o) const;

  bool contains(const Rational& q) const;
  bool definitely_lt(const Rational& q) const;   // hi <  q
  bool definitely_le(const Rational& q) const;   // hi <= q
  bool definitely_gt(const Rational& q) const;   // lo >  q
  bool definitely_ge(const Rational& q) const;   // lo >= q
  bool is_exact_zero() const;

  // Exact endpoint conversions (binary floats are rationals).
  Rational lower_rational() const;
  Rational upper_rational() const;
  Rational radius_upper_rational() const;

  double center_double() const;
  double radius_double() const;
  unsigned precision_bits() const;

  // "c ± r" in decimal, for human-readable reports.
  std::string to_string(int digits = 20) const;

 private:
  explicit BoundedReal(unsigned bits);
  static BoundedReal make(unsigned bits);

  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace runnerlab
