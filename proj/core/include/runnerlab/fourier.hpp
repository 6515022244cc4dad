#pragma once

#include <cstdint>
#include <vector>

#include "runnerlab/bounded_real.hpp"
#include "runnerlab/dissociation.hpp"
#include "runnerlab/rational.hpp"
#include "runnerlab/speed_set.hpp"

namespace runnerlab {

inline constexpr std::uint64_t kDefaultRieszBudget = 531441;  // 3^12

// Phi(t) = #{v in V : ||t v|| <= delta}; the indicator is closed, so
// boundary points count as inside.
struct PhiSpec {
  PhiSpec(SpeedSet speeds, Rational delta);
  SpeedSet speeds;
  Rational delta;  // in (0, 1/2]
  std::int64_t n() const { return static_cast<std::int64_t>(speeds.size()); }
};

std::int64_t phi_value(const PhiSpec& spec, const Rational& t);

struct MinPhi {
  std::int64_t min_value;
  Rational witness;
};

// Exact minimum over the torus: Phi is piecewise constant with breakpoints
// at (a +- delta)/v, so evaluating breakpoints and piece midpoints suffices.
// min >= 1 iff delta >= ML(V).
MinPhi min_phi(const PhiSpec& spec, std::uint64_t budget = 10'000'000);

// lambda(m) = sin(2 pi m delta) / (pi m); even in m, exactly zero when
// 2 m delta is an integer. The enclosure is intersected with the analytic
// bound |lambda(m)| <= min(2 delta, 1/(pi |m|)).
BoundedReal lambda_coeff(std::int64_t m, const Rational& delta, Precision prec = {});

struct FourierCoefficient {
  std::int64_t frequency;
  BoundedReal value;
};

// PhiHat(0) = 2 delta n; PhiHat(m) = sum over v | m of lambda(m/v) otherwise.
FourierCoefficient phi_hat(const PhiSpec& spec, std::int64_t m, Precision prec = {});

// Fejer kernel K_m(x) = sin^2(pi m x) / (m sin^2(pi x)), K_m(0) = m.
BoundedReal fejer_kernel(std::int64_t m, const Rational& x, Precision prec = {});

enum class FejerWeights {
  Proof,      // (1 - j/M): the Fejer-triangle weights the argument actually uses
  Statement,  // (1 - j/n): the weights as stated, negative for j > n
};

// One-sided weighted sum over j = 1..M of w_j * PhiHat(j v); M = 100 n in
// the large-coefficient inequality.
BoundedReal fejer_weighted_sum(const PhiSpec& spec, std::int64_t v, std::int64_t M,
                               Precision prec = {}, FejerWeights weights = FejerWeights::Proof);

// Finitely supported probability measure on the torus.
struct DiscreteMeasure {
  std::vector<std::pair<Rational, Rational>> atoms;  // (point in [0,1), weight >= 0)

  static DiscreteMeasure make(std::vector<std::pair<Rational, Rational>> atoms);
  static DiscreteMeasure point_mass(const Rational& x);
  // (1/(p-1)) * sum of unit masses at j/p, j = 1..p-1.
  static DiscreteMeasure uniform_nonzero_mod(std::int64_t p);
};

// Exact integral of Phi against the measure.
Rational integrate_discrete(const PhiSpec& spec, const DiscreteMeasure& mu);

// Riesz product R(x) = prod over m in frequencies of (1 - weight cos(2 pi m x)):
// nonnegative with unit mass whenever the frequency set is 2-dissociated.
struct RieszSpec {
  static RieszSpec make(std::vector<std::int64_t> frequencies, Rational weight,
                        const DissociationBudget& budget = {});
  std::vector<std::int64_t> frequencies;  // positive, 2-dissociated
  Rational weight;                        // in [0, 1]
  std::size_t dimension() const { return frequencies.size(); }

 private:
  RieszSpec() = default;
};

// Pointwise evaluation of R, used as the sampling oracle.
BoundedReal riesz_value(const RieszSpec& riesz, const Rational& x, Precision prec = {});

// Parseval evaluation over the shells E_k: integral of Phi R dx equals
// 2 delta n + sum_k (-weight/2)^k sum over m in E_k of PhiHat(m). Exact
// identity (R is a trigonometric polynomial), evaluated in intervals.
BoundedReal integrate_riesz(const PhiSpec& spec, const RieszSpec& riesz, Precision prec = {},
                            std::uint64_t budget = kDefaultRieszBudget);

// Independent midpoint-rule oracle with a rigorous total-variation remainder.
BoundedReal integrate_riesz_quadrature(const PhiSpec& spec, const RieszSpec& riesz,
                                       std::int64_t samples, Precision prec = {});

}  // namespace runnerlab
