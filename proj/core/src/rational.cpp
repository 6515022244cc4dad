#include "runnerlab/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "runnerlab/errors.hpp"

namespace runnerlab {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::from_mpz(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q;
  mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
  q.canonicalize();
  return Rational(q);
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) fail(Errc::ParseError, "empty rational literal");
  auto slash = text.find('/');
  auto dot = text.find('.');
  try {
    if (slash != std::string::npos) {
      mpz_class n(text.substr(0, slash)), d(text.substr(slash + 1));
      return from_mpz(n, d);
    }
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      std::size_t places = text.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") fail(Errc::ParseError, text);
      mpz_class n(digits), d;
      mpz_ui_pow_ui(d.get_mpz_t(), 10, places);
      return from_mpz(n, d);
    }
    return Rational(mpq_class(mpz_class(text)));
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "bad rational literal '" + text + "'");
  }
}

bool Rational::fits_int64() const {
  return q_.get_num().fits_slong_p() && q_.get_den().fits_slong_p();
}

std::int64_t Rational::num_int64() const { return q_.get_num().get_si(); }
std::int64_t Rational::den_int64() const { return q_.get_den().get_si(); }

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(q_ / o.q_));
}

Rational Rational::abs() const { return sgn(q_) < 0 ? -*this : *this; }

mpz_class Rational::floor_z() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return f;
}

Rational Rational::floor() const { return Rational(mpq_class(floor_z())); }

Rational Rational::frac() const { return *this - floor(); }

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace runnerlab
