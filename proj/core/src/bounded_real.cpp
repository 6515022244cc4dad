#include "runnerlab/bounded_real.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace runnerlab {

namespace {

unsigned join_prec(const BoundedReal& a, const BoundedReal& b) {
  return std::max(a.precision_bits(), b.precision_bits());
}

Rational mpfr_to_rational(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Rational(0);
  if (!mpfr_number_p(x)) throw std::domain_error("BoundedReal: non-finite endpoint");
  mpz_class z;
  mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), x);
  mpz_class p2;
  if (e >= 0) {
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return Rational::from_mpz(z * p2, 1);
  }
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(-e));
  return Rational::from_mpz(z, p2);
}

}  // namespace

BoundedReal::BoundedReal(unsigned bits) {
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
}

BoundedReal BoundedReal::make(unsigned bits) { return BoundedReal(bits); }

BoundedReal::BoundedReal() : BoundedReal(32u) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

BoundedReal::BoundedReal(const BoundedReal& o) : BoundedReal(o.precision_bits()) {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

BoundedReal::BoundedReal(BoundedReal&& o) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

BoundedReal& BoundedReal::operator=(const BoundedReal& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.precision_bits());
    mpfr_set_prec(hi_, o.precision_bits());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

BoundedReal& BoundedReal::operator=(BoundedReal&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

BoundedReal::~BoundedReal() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

BoundedReal BoundedReal::from_rational(const Rational& q, Precision prec) {
  BoundedReal r = make(prec.bits);
  mpfr_set_q(r.lo_, q.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.raw().get_mpq_t(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::from_rational_endpoints(const Rational& lo, const Rational& hi,
                                                 Precision prec) {
  if (lo > hi) throw std::domain_error("BoundedReal: inverted endpoints");
  BoundedReal r = make(prec.bits);
  mpfr_set_q(r.lo_, lo.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.raw().get_mpq_t(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::from_int(std::int64_t n, Precision prec) {
  BoundedReal r = make(prec.bits);
  mpfr_set_si(r.lo_, static_cast<long>(n), MPFR_RNDD);
  mpfr_set_si(r.hi_, static_cast<long>(n), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::pi(Precision prec) {
  BoundedReal r = make(prec.bits);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::operator+(const BoundedReal& o) const {
  BoundedReal r = make(join_prec(*this, o));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::operator-(const BoundedReal& o) const {
  BoundedReal r = make(join_prec(*this, o));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::operator-() const {
  BoundedReal r = make(precision_bits());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::operator*(const BoundedReal& o) const {
  unsigned bits = join_prec(*this, o);
  BoundedReal r = make(bits);
  mpfr_t t;
  mpfr_init2(t, bits);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {o.lo_, o.hi_};
  bool first = true;
  for (auto x : a) {
    for (auto y : b) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

BoundedReal BoundedReal::div(const BoundedReal& den) const {
  if (!(mpfr_sgn(den.lo_) > 0 || mpfr_sgn(den.hi_) < 0))
    throw std::domain_error("BoundedReal: division by interval containing zero");
  unsigned bits = join_prec(*this, den);
  BoundedReal r = make(bits);
  mpfr_t t;
  mpfr_init2(t, bits);
  const mpfr_srcptr a[2] = {lo_, hi_};
  const mpfr_srcptr b[2] = {den.lo_, den.hi_};
  bool first = true;
  for (auto x : a) {
    for (auto y : b) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

BoundedReal BoundedReal::mul_rational(const Rational& q) const {
  BoundedReal r = make(precision_bits());
  if (q.sign() >= 0) {
    mpfr_mul_q(r.lo_, lo_, q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_, hi_, q.raw().get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(r.lo_, hi_, q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(r.hi_, lo_, q.raw().get_mpq_t(), MPFR_RNDU);
  }
  return r;
}

BoundedReal BoundedReal::add_rational(const Rational& q) const {
  BoundedReal r = make(precision_bits());
  mpfr_add_q(r.lo_, lo_, q.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_add_q(r.hi_, hi_, q.raw().get_mpq_t(), MPFR_RNDU);
  return r;
}

BoundedReal BoundedReal::abs() const {
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  BoundedReal r = make(precision_bits());
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  if (mpfr_cmp(r.hi_, hi_) < 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

// Common body for sin/cos: |f(x) - f(m)| <= |x - m| for the 1-Lipschitz
// kernels, so the midpoint value widened by the radius is an enclosure.
BoundedReal BoundedReal::sin() const {
  unsigned bits = precision_bits();
  BoundedReal r = make(bits);
  mpfr_t mid, rad, t;
  mpfr_init2(mid, bits);
  mpfr_init2(rad, bits);
  mpfr_init2(t, bits);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  mpfr_sub(rad, hi_, mid, MPFR_RNDU);
  mpfr_sub(t, mid, lo_, MPFR_RNDU);
  if (mpfr_cmp(t, rad) > 0) mpfr_set(rad, t, MPFR_RNDU);
  mpfr_sin(t, mid, MPFR_RNDD);
  mpfr_sub(r.lo_, t, rad, MPFR_RNDD);
  mpfr_sin(t, mid, MPFR_RNDU);
  mpfr_add(r.hi_, t, rad, MPFR_RNDU);
  // |sin| <= 1
  if (mpfr_cmp_si(r.lo_, -1) < 0) mpfr_set_si(r.lo_, -1, MPFR_RNDD);
  if (mpfr_cmp_si(r.hi_, 1) > 0) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
  mpfr_clears(mid, rad, t, nullptr);
  return r;
}

BoundedReal BoundedReal::cos() const {
  unsigned bits = precision_bits();
  BoundedReal r = make(bits);
  mpfr_t mid, rad, t;
  mpfr_init2(mid, bits);
  mpfr_init2(rad, bits);
  mpfr_init2(t, bits);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  mpfr_sub(rad, hi_, mid, MPFR_RNDU);
  mpfr_sub(t, mid, lo_, MPFR_RNDU);
  if (mpfr_cmp(t, rad) > 0) mpfr_set(rad, t, MPFR_RNDU);
  mpfr_cos(t, mid, MPFR_RNDD);
  mpfr_sub(r.lo_, t, rad, MPFR_RNDD);
  mpfr_cos(t, mid, MPFR_RNDU);
  mpfr_add(r.hi_, t, rad, MPFR_RNDU);
  if (mpfr_cmp_si(r.lo_, -1) < 0) mpfr_set_si(r.lo_, -1, MPFR_RNDD);
  if (mpfr_cmp_si(r.hi_, 1) > 0) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
  mpfr_clears(mid, rad, t, nullptr);
  return r;
}

BoundedReal BoundedReal::acos() const {
  unsigned bits = precision_bits();
  mpfr_t xlo, xhi;
  mpfr_init2(xlo, bits);
  mpfr_init2(xhi, bits);
  mpfr_set(xlo, lo_, MPFR_RNDD);
  mpfr_set(xhi, hi_, MPFR_RNDU);
  if (mpfr_cmp_si(xlo, -1) < 0) mpfr_set_si(xlo, -1, MPFR_RNDD);
  if (mpfr_cmp_si(xhi, 1) > 0) mpfr_set_si(xhi, 1, MPFR_RNDU);
  if (mpfr_cmp(xlo, xhi) > 0) {
    mpfr_clears(xlo, xhi, nullptr);
    throw std::domain_error("BoundedReal::acos: interval outside [-1, 1]");
  }
  BoundedReal r = make(bits);
  mpfr_acos(r.lo_, xhi, MPFR_RNDD);  // decreasing
  mpfr_acos(r.hi_, xlo, MPFR_RNDU);
  mpfr_clears(xlo, xhi, nullptr);
  return r;
}

BoundedReal BoundedReal::intersect(const BoundedReal& o) const {
  BoundedReal r = make(join_prec(*this, o));
  mpfr_set(r.lo_, mpfr_cmp(lo_, o.lo_) >= 0 ? lo_ : o.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, mpfr_cmp(hi_, o.hi_) <= 0 ? hi_ : o.hi_, MPFR_RNDU);
  if (mpfr_cmp(r.lo_, r.hi_) > 0)
    throw std::logic_error("BoundedReal::intersect: disjoint enclosures of one value");
  return r;
}

bool BoundedReal::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.raw().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.raw().get_mpq_t()) >= 0;
}

bool BoundedReal::definitely_lt(const Rational& q) const {
  return mpfr_cmp_q(hi_, q.raw().get_mpq_t()) < 0;
}
bool BoundedReal::definitely_le(const Rational& q) const {
  return mpfr_cmp_q(hi_, q.raw().get_mpq_t()) <= 0;
}
bool BoundedReal::definitely_gt(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.raw().get_mpq_t()) > 0;
}
bool BoundedReal::definitely_ge(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.raw().get_mpq_t()) >= 0;
}

bool BoundedReal::is_exact_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

Rational BoundedReal::lower_rational() const { return mpfr_to_rational(lo_); }
Rational BoundedReal::upper_rational() const { return mpfr_to_rational(hi_); }

Rational BoundedReal::radius_upper_rational() const {
  Rational w = upper_rational() - lower_rational();
  return w * Rational(1, 2);
}

double BoundedReal::center_double() const {
  return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2.0;
}

double BoundedReal::radius_double() const {
  mpfr_t w;
  mpfr_init2(w, precision_bits());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double r = mpfr_get_d(w, MPFR_RNDU) / 2.0;
  mpfr_clear(w);
  return r;
}

unsigned BoundedReal::precision_bits() const {
  return static_cast<unsigned>(mpfr_get_prec(lo_));
}

std::string BoundedReal::to_string(int digits) const {
  unsigned bits = precision_bits();
  mpfr_t mid, rad;
  mpfr_init2(mid, bits);
  mpfr_init2(rad, bits);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  mpfr_sub(rad, hi_, lo_, MPFR_RNDU);
  mpfr_div_2ui(rad, rad, 1, MPFR_RNDU);
  char* cm = nullptr;
  char* cr = nullptr;
  mpfr_asprintf(&cm, "%.*Rg", digits, mid);
  mpfr_asprintf(&cr, "%.3Rg", rad);
  std::string s = std::string(cm) + " ± " + cr;
  mpfr_free_str(cm);
  mpfr_free_str(cr);
  mpfr_clears(mid, rad, nullptr);
  return s;
}

}  // namespace runnerlab
