#include "runnerlab/exact_ml.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "runnerlab/errors.hpp"

namespace runnerlab {

namespace {

struct Frac {
  std::int64_t num;  // in [0, den)
  std::int64_t den;  // > 0
};

// a/b < c/d via 128-bit cross multiplication.
bool frac_lt(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

// min_j ||(a/b) v_j|| as a numerator over the common denominator b.
std::int64_t loneliness_num(const SpeedSet& V, std::int64_t a, std::int64_t b) {
  std::int64_t best = b;  // > b/2, larger than any torus distance numerator
  for (auto v : V.speeds()) {
    std::int64_t r = mod_mul(a, v, b);
    std::int64_t d = std::min(r, b - r);
    if (d < best) best = d;
    if (best == 0) break;
  }
  return best;
}

std::uint64_t candidate_count(const SpeedSet& V) {
  const auto& s = V.speeds();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j)
      count += static_cast<std::uint64_t>(s[i] + s[j] - 1);
    for (std::size_t j = i + 1; j < s.size(); ++j)
      count += static_cast<std::uint64_t>(s[j] - s[i] > 0 ? s[j] - s[i] - 1 : 0);
    count += static_cast<std::uint64_t>(s[i]);
  }
  return count;
}

template <typename Fn>
void for_each_candidate(const SpeedSet& V, Fn&& fn) {
  const auto& s = V.speeds();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      std::int64_t den = s[i] + s[j];
      for (std::int64_t a = 1; a < den; ++a) fn(a, den);
    }
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      std::int64_t den = s[j] - s[i];
      for (std::int64_t a = 1; a < den; ++a) fn(a, den);
    }
    std::int64_t den = 2 * s[i];
    for (std::int64_t a = 1; a < den; a += 2) fn(a, den);
  }
}

void check_budget(const SpeedSet& V, std::uint64_t budget) {
  std::uint64_t count = candidate_count(V);
  if (count > budget)
    fail(Errc::BudgetExceeded, "candidate set of size " + std::to_string(count) +
                                   " exceeds budget " + std::to_string(budget));
}

}  // namespace

Rational loneliness_at(const SpeedSet& V, const Rational& t) {
  Rational best(1, 2);
  for (auto v : V.speeds()) {
    Rational d = torus_norm(t * Rational(v)).value();
    if (d < best) best = d;
  }
  return best;
}

std::vector<Rational> candidate_times(const SpeedSet& V, std::uint64_t budget) {
  check_budget(V, budget);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Rational> out;
  for_each_candidate(V, [&](std::int64_t a, std::int64_t den) {
    std::int64_t g = std::gcd(a, den);
    std::uint64_t key = (static_cast<std::uint64_t>(a / g) << 32) |
                        static_cast<std::uint64_t>(den / g);
    if (seen.insert(key).second) out.emplace_back(a / g, den / g);
  });
  std::sort(out.begin(), out.end());
  return out;
}

MLResult ml_exact(const SpeedSet& V, std::uint64_t budget) {
  check_budget(V, budget);
  // best value bn/bd, witness wa/wd; smallest witness wins ties
  std::int64_t bn = 0, bd = 1, wa = 0, wd = 1;
  bool have = false;
  for_each_candidate(V, [&](std::int64_t a, std::int64_t den) {
    std::int64_t num = loneliness_num(V, a, den);
    if (!have || frac_lt(bn, bd, num, den) ||
        (!frac_lt(num, den, bn, bd) && frac_lt(a, den, wa, wd))) {
      bn = num;
      bd = den;
      wa = a;
      wd = den;
      have = true;
    }
  });
  if (!have) {  // single-speed sets still produce peak candidates; unreachable
    return {Rational(0), Rational(0)};
  }
  return {Rational(bn, bd), Rational(wa, wd)};
}

Rational ml_grid_oracle(const SpeedSet& V, std::int64_t N) {
  if (N < 1) throw std::domain_error("ml_grid_oracle: N must be >= 1");
  std::int64_t best = 0;
  for (std::int64_t i = 0; i < N; ++i) {
    std::int64_t m = N;
    for (auto v : V.speeds()) {
      std::int64_t r = mod_mul(i, v, N);
      std::int64_t d = std::min(r, N - r);
      if (d < m) m = d;
      if (m <= best) break;
    }
    if (m > best) best = m;
  }
  return Rational(best, N);
}

}  // namespace runnerlab
