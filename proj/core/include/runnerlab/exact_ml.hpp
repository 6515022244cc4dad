#pragma once

#include <cstdint>
#include <vector>

#include "runnerlab/rational.hpp"
#include "runnerlab/speed_set.hpp"

namespace runnerlab {

inline constexpr std::uint64_t kDefaultCandidateBudget = 10'000'000;

// max_t min_j ||t v_j|| together with the smallest time attaining it.
struct MLResult {
  Rational value;
  Rational witness_time;
};

// min_j ||t v_j||, exact.
Rational loneliness_at(const SpeedSet& V, const Rational& t);

// Every local maximum of t -> min_j ||t v_j|| is either a sawtooth peak
// (t v_j in 1/2 + Z) or a crossing of an increasing branch of one sawtooth
// with a decreasing branch of another, so the maximizer lies among
// a/(v_i+v_j), a/(v_j-v_i) and (2a+1)/(2 v_j). Returned sorted and deduplicated,
// restricted to (0, 1).
std::vector<Rational> candidate_times(const SpeedSet& V,
                                      std::uint64_t budget = kDefaultCandidateBudget);

MLResult ml_exact(const SpeedSet& V, std::uint64_t budget = kDefaultCandidateBudget);

// Independent lower-bound oracle: max over the uniform grid {i/N}. Stays
// within max(V)/N of ml_exact (the objective is Lipschitz with constant
// max V). Works in integer arithmetic, sharing nothing with ml_exact's path.
Rational ml_grid_oracle(const SpeedSet& V, std::int64_t N);

}  // namespace runnerlab
