#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace runnerlab {

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator. All exact torus computations run on this type.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);
  static Rational from_mpz(const mpz_class& num, const mpz_class& den);

  // Parses "a", "a/b", or a plain decimal like "0.125".
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool fits_int64() const;
  std::int64_t num_int64() const;
  std::int64_t den_int64() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  Rational abs() const;
  // Largest integer <= value, as a Rational.
  Rational floor() const;
  mpz_class floor_z() const;
  // Fractional part in [0, 1).
  Rational frac() const;

  bool operator==(const Rational& o) const { return cmp(q_, o.q_) == 0; }
  bool operator!=(const Rational& o) const { return cmp(q_, o.q_) != 0; }
  bool operator<(const Rational& o) const { return cmp(q_, o.q_) < 0; }
  bool operator<=(const Rational& o) const { return cmp(q_, o.q_) <= 0; }
  bool operator>(const Rational& o) const { return cmp(q_, o.q_) > 0; }
  bool operator>=(const Rational& o) const { return cmp(q_, o.q_) >= 0; }

  double to_double() const { return q_.get_d(); }
  // "num/den", or just "num" for integers.
  std::string to_string() const;

 private:
  mpq_class q_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace runnerlab
