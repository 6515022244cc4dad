#include "runnerlab/fourier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "runnerlab/errors.hpp"

namespace runnerlab {

namespace {

// sin(2 pi q) with the rational argument reduced first, so multiples of 1/2
// come out exactly zero.
BoundedReal sin_two_pi(const Rational& q, Precision prec) {
  Rational f = q.frac();
  if (f.is_zero() || f == Rational(1, 2)) return BoundedReal::exact_zero();
  BoundedReal angle =
      BoundedReal::pi(prec).mul_rational(f * Rational(2));
  return angle.sin();
}

// cos(2 pi q); exact at quarter-integers.
BoundedReal cos_two_pi(const Rational& q, Precision prec) {
  Rational f = q.frac();
  if (f.is_zero()) return BoundedReal::from_int(1, prec);
  if (f == Rational(1, 2)) return BoundedReal::from_int(-1, prec);
  if (f == Rational(1, 4) || f == Rational(3, 4)) return BoundedReal::exact_zero();
  BoundedReal angle = BoundedReal::pi(prec).mul_rational(f * Rational(2));
  return angle.cos();
}

struct LambdaCache {
  const Rational& delta;
  Precision prec;
  std::map<std::int64_t, BoundedReal> memo;

  const BoundedReal& get(std::int64_t j) {
    auto it = memo.find(j);
    if (it != memo.end()) return it->second;
    return memo.emplace(j, lambda_coeff(j, delta, prec)).first->second;
  }
};

BoundedReal phi_hat_cached(const PhiSpec& spec, std::int64_t m, LambdaCache& cache,
                           Precision prec) {
  if (m == 0) return BoundedReal::from_rational(spec.delta * Rational(2 * spec.n()), prec);
  std::int64_t a = m < 0 ? -m : m;
  BoundedReal sum = BoundedReal::exact_zero();
  for (auto v : spec.speeds.speeds())
    if (a % v == 0) sum += cache.get(a / v);
  return sum;
}

}  // namespace

PhiSpec::PhiSpec(SpeedSet s, Rational d) : speeds(std::move(s)), delta(std::move(d)) {
  if (delta <= Rational(0) || delta > Rational(1, 2))
    throw std::domain_error("PhiSpec: delta must lie in (0, 1/2]");
}

std::int64_t phi_value(const PhiSpec& spec, const Rational& t) {
  std::int64_t count = 0;
  for (auto v : spec.speeds.speeds())
    if (torus_norm(t * Rational(v)).value() <= spec.delta) ++count;
  return count;
}

MinPhi min_phi(const PhiSpec& spec, std::uint64_t budget) {
  std::uint64_t breakpoints = 0;
  for (auto v : spec.speeds.speeds()) breakpoints += 2 * static_cast<std::uint64_t>(v) + 2;
  if (2 * breakpoints > budget)
    fail(Errc::BudgetExceeded, "min_phi breakpoint count exceeds budget");

  std::set<Rational> points;
  for (auto v : spec.speeds.speeds()) {
    Rational rv(v);
    for (std::int64_t a = 0; a <= v; ++a) {
      points.insert(((Rational(a) - spec.delta) / rv).frac());
      points.insert(((Rational(a) + spec.delta) / rv).frac());
    }
  }
  std::vector<Rational> samples(points.begin(), points.end());
  std::size_t nb = samples.size();
  for (std::size_t i = 0; i + 1 < nb; ++i)
    samples.push_back((samples[i] + samples[i + 1]) * Rational(1, 2));
  // wrap-around piece between the last breakpoint and the first one
  samples.push_back(((samples[nb - 1] + samples[0] + Rational(1)) * Rational(1, 2)).frac());
  std::sort(samples.begin(), samples.end());

  std::int64_t best = spec.n() + 1;
  Rational witness(0);
  for (const auto& t : samples) {
    std::int64_t val = phi_value(spec, t);
    if (val < best) {
      best = val;
      witness = t;
    }
  }
  return {best, witness};
}

BoundedReal lambda_coeff(std::int64_t m, const Rational& delta, Precision prec) {
  if (m == 0) throw std::domain_error("lambda_coeff: m must be nonzero");
  std::int64_t a = m < 0 ? -m : m;
  BoundedReal s = sin_two_pi(Rational(a) * delta, prec);
  if (s.is_exact_zero()) return s;
  BoundedReal value = s.div(BoundedReal::pi(prec).mul_rational(Rational(a)));
  // |lambda| <= min(2 delta, 1/(pi m)); intersecting keeps the enclosure sound
  Rational cap2d = delta * Rational(2);
  BoundedReal cap_pi = BoundedReal::from_int(1, prec).div(
      BoundedReal::pi(prec).mul_rational(Rational(a)));
  Rational cap = min(cap2d, cap_pi.upper_rational());
  return value.intersect(BoundedReal::from_rational_endpoints(-cap, cap, prec));
}

FourierCoefficient phi_hat(const PhiSpec& spec, std::int64_t m, Precision prec) {
  LambdaCache cache{spec.delta, prec, {}};
  return {m, phi_hat_cached(spec, m, cache, prec)};
}

BoundedReal fejer_kernel(std::int64_t m, const Rational& x, Precision prec) {
  if (m < 1) throw std::domain_error("fejer_kernel: degree parameter must be >= 1");
  Rational f = x.frac();
  if (f.is_zero()) return BoundedReal::from_int(m, prec);
  BoundedReal num = sin_two_pi(Rational(m) * f * Rational(1, 2), prec);  // sin(pi m x)
  if (num.is_exact_zero()) return BoundedReal::exact_zero();
  BoundedReal den = sin_two_pi(f * Rational(1, 2), prec);  // sin(pi x), nonzero for x not integer
  BoundedReal k = (num * num).div(den.mul_rational(Rational(m)) * den);
  // 0 <= K_m <= m pointwise
  return k.intersect(BoundedReal::from_rational_endpoints(Rational(0), Rational(m), prec));
}

BoundedReal fejer_weighted_sum(const PhiSpec& spec, std::int64_t v, std::int64_t M,
                               Precision prec, FejerWeights weights) {
  if (!spec.speeds.contains(v))
    throw std::domain_error("fejer_weighted_sum: v must be one of the speeds");
  if (M < 1) throw std::domain_error("fejer_weighted_sum: M must be >= 1");
  LambdaCache cache{spec.delta, prec, {}};
  BoundedReal sum = BoundedReal::exact_zero();
  for (std::int64_t j = 1; j <= M; ++j) {
    Rational w = weights == FejerWeights::Proof
                     ? Rational(1) - Rational(j, M)
                     : Rational(1) - Rational(j, spec.n());
    if (w.is_zero()) continue;
    sum += phi_hat_cached(spec, j * v, cache, prec).mul_rational(w);
  }
  return sum;
}

DiscreteMeasure DiscreteMeasure::make(std::vector<std::pair<Rational, Rational>> atoms) {
  Rational total(0);
  for (auto& [point, weight] : atoms) {
    if (weight < Rational(0)) throw std::domain_error("DiscreteMeasure: negative weight");
    point = point.frac();
    total += weight;
  }
  if (total != Rational(1)) throw std::domain_error("DiscreteMeasure: weights must sum to 1");
  return DiscreteMeasure{std::move(atoms)};
}

DiscreteMeasure DiscreteMeasure::point_mass(const Rational& x) {
  return make({{x, Rational(1)}});
}

DiscreteMeasure DiscreteMeasure::uniform_nonzero_mod(std::int64_t p) {
  if (p < 2) throw std::domain_error("uniform_nonzero_mod: p must be >= 2");
  std::vector<std::pair<Rational, Rational>> atoms;
  for (std::int64_t j = 1; j < p; ++j) atoms.emplace_back(Rational(j, p), Rational(1, p - 1));
  return make(std::move(atoms));
}

Rational integrate_discrete(const PhiSpec& spec, const DiscreteMeasure& mu) {
  Rational sum(0);
  for (const auto& [point, weight] : mu.atoms)
    sum += weight * Rational(phi_value(spec, point));
  return sum;
}

RieszSpec RieszSpec::make(std::vector<std::int64_t> frequencies, Rational weight,
                          const DissociationBudget& budget) {
  std::sort(frequencies.begin(), frequencies.end());
  if (!frequencies.empty() && frequencies.front() <= 0)
    throw std::domain_error("RieszSpec: frequencies must be positive");
  if (std::adjacent_find(frequencies.begin(), frequencies.end()) != frequencies.end())
    throw std::domain_error("RieszSpec: duplicate frequency");
  if (weight < Rational(0) || weight > Rational(1))
    throw std::domain_error("RieszSpec: weight must lie in [0, 1]");
  if (auto rel = find_relation(frequencies, 2, budget)) {
    (void)rel;
    fail(Errc::NotDissociated, "Riesz frequencies must be 2-dissociated");
  }
  RieszSpec spec;
  spec.frequencies = std::move(frequencies);
  spec.weight = std::move(weight);
  return spec;
}

BoundedReal riesz_value(const RieszSpec& riesz, const Rational& x, Precision prec) {
  BoundedReal prod = BoundedReal::from_int(1, prec);
  Rational lo_cap = Rational(1) - riesz.weight;
  Rational hi_cap = Rational(1) + riesz.weight;
  for (auto m : riesz.frequencies) {
    BoundedReal factor = BoundedReal::from_int(1, prec) -
                         cos_two_pi(Rational(m) * x, prec).mul_rational(riesz.weight);
    factor = factor.intersect(BoundedReal::from_rational_endpoints(lo_cap, hi_cap, prec));
    prod = prod * factor;
  }
  return prod;
}

BoundedReal integrate_riesz(const PhiSpec& spec, const RieszSpec& riesz, Precision prec,
                            std::uint64_t budget) {
  std::size_t d = riesz.dimension();
  std::uint64_t shells = 1;
  for (std::size_t i = 0; i < d; ++i) {
    shells *= 3;
    if (shells > budget)
      fail(Errc::BudgetExceeded, "Riesz Parseval sum over 3^" + std::to_string(d) +
                                     " frequencies exceeds budget");
  }

  LambdaCache cache{spec.delta, prec, {}};
  BoundedReal total = BoundedReal::from_rational(spec.delta * Rational(2 * spec.n()), prec);
  Rational coeff(1);
  DissociationBudget diss_budget;
  diss_budget.max_ops = budget;
  for (std::size_t k = 1; k <= d; ++k) {
    coeff *= -riesz.weight * Rational(1, 2);
    BoundedReal shell_sum = BoundedReal::exact_zero();
    for (const auto& s : enumerate_Ek(riesz.frequencies, static_cast<int>(k), diss_budget))
      shell_sum += phi_hat_cached(spec, s.value, cache, prec);
    total += shell_sum.mul_rational(coeff);
  }
  return total;
}

BoundedReal integrate_riesz_quadrature(const PhiSpec& spec, const RieszSpec& riesz,
                                       std::int64_t samples, Precision prec) {
  if (samples < 1) throw std::domain_error("integrate_riesz_quadrature: need >= 1 sample");
  BoundedReal sum = BoundedReal::exact_zero();
  for (std::int64_t i = 0; i < samples; ++i) {
    Rational x(2 * i + 1, 2 * samples);
    std::int64_t phi = phi_value(spec, x);
    if (phi != 0) sum += riesz_value(riesz, x, prec).mul_rational(Rational(phi));
  }
  sum = sum.mul_rational(Rational(1, samples));

  // Midpoint-rule remainder via total variation:
  //   TV(Phi R) <= n * TV(R) + (1+w)^d * TV(Phi),
  //   TV(Phi) <= 2 sum(v),  TV(R) <= 2 pi w (1+w)^(d-1) sum(m) <= 8 w (1+w)^(d-1) sum(m).
  Rational sum_v(0);
  for (auto v : spec.speeds.speeds()) sum_v += Rational(v);
  Rational sum_m(0);
  for (auto m : riesz.frequencies) sum_m += Rational(m);
  Rational one_plus_w = Rational(1) + riesz.weight;
  Rational pow_d1(1);
  for (std::size_t i = 0; i + 1 < riesz.dimension(); ++i) pow_d1 *= one_plus_w;
  Rational tv_r = Rational(8) * riesz.weight * pow_d1 * sum_m;
  Rational tv_phi = Rational(2) * sum_v;
  Rational tv = Rational(spec.n()) * tv_r + pow_d1 * one_plus_w * tv_phi;
  Rational rem = tv / Rational(samples);
  return sum + BoundedReal::from_rational_endpoints(-rem, rem, prec);
}

}  // namespace runnerlab
