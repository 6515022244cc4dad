#include "runnerlab/dissociation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "runnerlab/errors.hpp"

namespace runnerlab {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t modulus) {
  if (modulus == 0) return x;
  std::int64_t r = x % modulus;
  if (r < 0) r += modulus;
  return r;
}

std::uint64_t pow_capped(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Coefficient iteration order 0, 1, -1, 2, -2, ... so sparse relations are
// found first.
int nth_coeff(int idx) { return idx == 0 ? 0 : (idx % 2 == 1 ? (idx + 1) / 2 : -(idx / 2)); }

struct RelationSearch {
  std::span<const std::int64_t> elems;
  int k;
  std::int64_t modulus;
  std::vector<int> coeffs;
  std::vector<std::int64_t> suffix_reach;  // k * sum of |elems[j]|, j >= i (Z only)

  std::optional<std::vector<int>> dfs(std::size_t i, std::int64_t sum, bool nonzero) {
    if (i == elems.size()) {
      if (nonzero && reduce(sum, modulus) == 0) return coeffs;
      return std::nullopt;
    }
    if (modulus == 0 && std::llabs(sum) > suffix_reach[i]) return std::nullopt;
    for (int idx = 0; idx < 2 * k + 1; ++idx) {
      int c = nth_coeff(idx);
      coeffs[i] = c;
      auto r = dfs(i + 1, sum + static_cast<std::int64_t>(c) * elems[i], nonzero || c != 0);
      if (r) return r;
    }
    coeffs[i] = 0;
    return std::nullopt;
  }
};

// Meet in the middle: store one side's sums sorted, scan the other side.
// Any relation splits across the two sides, so one stored representative per
// sum suffices; a nonzero stored vector summing to zero is itself a relation.
std::optional<std::vector<int>> mitm_search(std::span<const std::int64_t> elems, int k,
                                            std::int64_t modulus, std::uint64_t max_ops) {
  const std::size_t n = elems.size();
  const std::size_t h = n / 2;
  const std::uint64_t radix = 2 * static_cast<std::uint64_t>(k) + 1;
  std::uint64_t store_count = pow_capped(radix, h, max_ops);
  std::uint64_t scan_count = pow_capped(radix, n - h, max_ops);
  if (store_count > max_ops || scan_count > max_ops)
    fail(Errc::BudgetExceeded, "relation search needs " + std::to_string(scan_count) +
                                   " coefficient vectors per side");

  auto unpack = [&](std::uint64_t code, std::size_t offset, std::size_t len,
                    std::vector<int>& out) {
    for (std::size_t i = 0; i < len; ++i) {
      out[offset + i] = nth_coeff(static_cast<int>(code % radix));
      code /= radix;
    }
  };
  auto side_sum = [&](std::uint64_t code, std::size_t offset, std::size_t len) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < len; ++i) {
      s += static_cast<std::int64_t>(nth_coeff(static_cast<int>(code % radix))) * elems[offset + i];
      code /= radix;
    }
    return reduce(s, modulus);
  };

  std::vector<std::pair<std::int64_t, std::uint64_t>> stored;
  stored.reserve(store_count);
  for (std::uint64_t code = 0; code < store_count; ++code) {
    std::int64_t s = side_sum(code, 0, h);
    if (code != 0 && s == 0) {  // relation entirely within the stored side
      std::vector<int> coeffs(n, 0);
      unpack(code, 0, h, coeffs);
      return coeffs;
    }
    stored.emplace_back(s, code);
  }
  std::sort(stored.begin(), stored.end());
  stored.erase(std::unique(stored.begin(), stored.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }),
               stored.end());

  for (std::uint64_t code = 1; code < scan_count; ++code) {
    std::int64_t s = side_sum(code, h, n - h);
    std::int64_t target = reduce(-s, modulus);
    auto it = std::lower_bound(stored.begin(), stored.end(), std::make_pair(target, std::uint64_t{0}));
    if (it != stored.end() && it->first == target) {
      std::vector<int> coeffs(n, 0);
      unpack(it->second, 0, h, coeffs);
      unpack(code, h, n - h, coeffs);
      return coeffs;
    }
  }
  return std::nullopt;
}

constexpr std::size_t kDfsCutoff = 14;

}  // namespace

bool Relation::verifies() const {
  std::int64_t sum = 0;
  bool nonzero = false;
  for (auto [elem, c] : coefficients) {
    if (c < -order || c > order) return false;
    if (c != 0) nonzero = true;
    sum += static_cast<std::int64_t>(c) * elem;
  }
  return nonzero && reduce(sum, modulus) == 0;
}

std::optional<Relation> find_relation(std::span<const std::int64_t> D, int k,
                                      const DissociationBudget& budget, std::int64_t modulus) {
  if (k < 1) throw std::domain_error("find_relation: k must be >= 1");
  if (D.size() > budget.max_elements)
    fail(Errc::BudgetExceeded, "set of " + std::to_string(D.size()) + " elements exceeds cap " +
                                   std::to_string(budget.max_elements));
  if (D.empty()) return std::nullopt;

  std::optional<std::vector<int>> coeffs;
  if (D.size() <= kDfsCutoff && modulus == 0) {
    RelationSearch search{D, k, modulus, std::vector<int>(D.size(), 0), {}};
    search.suffix_reach.assign(D.size() + 1, 0);
    for (std::size_t i = D.size(); i-- > 0;)
      search.suffix_reach[i] =
          search.suffix_reach[i + 1] + static_cast<std::int64_t>(k) * std::llabs(D[i]);
    coeffs = search.dfs(0, 0, false);
  } else {
    coeffs = mitm_search(D, k, modulus, budget.max_ops);
  }
  if (!coeffs) return std::nullopt;
  Relation rel;
  rel.order = k;
  rel.modulus = modulus;
  for (std::size_t i = 0; i < D.size(); ++i) rel.coefficients.emplace_back(D[i], (*coeffs)[i]);
  return rel;
}

bool is_k_dissociated(std::span<const std::int64_t> D, int k, const DissociationBudget& budget,
                      std::int64_t modulus) {
  return !find_relation(D, k, budget, modulus).has_value();
}

namespace {

// Include-first DFS over subsets in ascending element order: the first
// maximum-size subset found is the lexicographically smallest one.
struct Dim2Search {
  std::span<const std::int64_t> elems;
  const DissociationBudget* budget;
  std::int64_t modulus;
  std::vector<std::int64_t> current;
  std::vector<std::int64_t> best;

  void run(std::size_t idx) {
    if (current.size() + (elems.size() - idx) <= best.size()) return;
    if (idx == elems.size()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    current.push_back(elems[idx]);
    if (is_k_dissociated(current, 2, *budget, modulus)) run(idx + 1);
    current.pop_back();
    run(idx + 1);
  }
};

// All elements that extend S while staying 2-dissociated.
bool is_maximal_2dissociated(const std::vector<std::int64_t>& S,
                             std::span<const std::int64_t> elems,
                             const DissociationBudget& budget, std::int64_t modulus) {
  std::vector<std::int64_t> probe(S);
  probe.push_back(0);
  for (auto e : elems) {
    if (std::find(S.begin(), S.end(), e) != S.end()) continue;
    probe.back() = e;
    if (is_k_dissociated(probe, 2, budget, modulus)) return false;
  }
  return true;
}

struct Dim2MinusSearch {
  std::span<const std::int64_t> elems;
  const DissociationBudget* budget;
  std::int64_t modulus;
  std::size_t target = 0;
  std::vector<std::int64_t> current;
  std::optional<std::vector<std::int64_t>> found;

  void run(std::size_t idx) {
    if (found) return;
    if (current.size() == target) {
      if (is_maximal_2dissociated(current, elems, *budget, modulus)) found = current;
      return;
    }
    if (current.size() + (elems.size() - idx) < target) return;
    for (std::size_t i = idx; i < elems.size() && !found; ++i) {
      current.push_back(elems[i]);
      if (is_k_dissociated(current, 2, *budget, modulus)) run(i + 1);
      current.pop_back();
    }
  }
};

}  // namespace

DimensionResult dim2_of(std::span<const std::int64_t> elems, const DissociationBudget& budget,
                        std::int64_t modulus) {
  Dim2Search search{elems, &budget, modulus, {}, {}};
  search.current.reserve(elems.size());
  search.run(0);
  return {static_cast<int>(search.best.size()), std::move(search.best)};
}

DimensionResult dim2(const SpeedSet& V, const DissociationBudget& budget) {
  return dim2_of(V.speeds(), budget, 0);
}

DimensionResult dim2_minus_of(std::span<const std::int64_t> elems,
                              const DissociationBudget& budget, std::int64_t modulus) {
  for (std::size_t size = 1; size <= elems.size(); ++size) {
    Dim2MinusSearch search{elems, &budget, modulus, size, {}, std::nullopt};
    search.run(0);
    if (search.found) return {static_cast<int>(size), std::move(*search.found)};
  }
  return {0, {}};  // unreachable for nonempty input: singletons are 2-dissociated
}

DimensionResult dim2_minus(const SpeedSet& V, const DissociationBudget& budget) {
  return dim2_minus_of(V.speeds(), budget, 0);
}

namespace {

std::vector<std::int64_t> span2_impl(std::span<const std::int64_t> D, std::int64_t modulus,
                                     const DissociationBudget& budget) {
  if (D.size() > 20)
    fail(Errc::BudgetExceeded, "span2 limited to 20 elements");
  std::uint64_t total = pow_capped(5, static_cast<unsigned>(D.size()), budget.max_ops);
  if (total > budget.max_ops)
    fail(Errc::BudgetExceeded, "span2 would enumerate " + std::to_string(total) + " sums");

  std::set<std::int64_t> sums;
  std::vector<int> coeff(D.size(), -2);
  while (true) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < D.size(); ++i) s += static_cast<std::int64_t>(coeff[i]) * D[i];
    if (modulus != 0) {
      s = reduce(s, modulus);
      if (s > modulus / 2) s -= modulus;  // centered representative
    }
    sums.insert(s);
    std::size_t i = 0;
    while (i < D.size() && coeff[i] == 2) coeff[i++] = -2;
    if (i == D.size()) break;
    ++coeff[i];
  }
  return {sums.begin(), sums.end()};
}

}  // namespace

std::vector<std::int64_t> span2(std::span<const std::int64_t> D, const DissociationBudget& budget) {
  return span2_impl(D, 0, budget);
}

std::vector<std::int64_t> span2_mod(std::span<const std::int64_t> D, std::int64_t p,
                                    const DissociationBudget& budget) {
  if (p < 2) throw std::domain_error("span2_mod: modulus must be >= 2");
  return span2_impl(D, p, budget);
}

std::vector<SignedSum> enumerate_Ek(std::span<const std::int64_t> D, int k,
                                    const DissociationBudget& budget) {
  if (k < 0 || static_cast<std::size_t>(k) > D.size())
    throw std::domain_error("enumerate_Ek: k out of range");
  if (auto rel = find_relation(D, 2, budget)) {
    (void)rel;
    fail(Errc::NotDissociated, "E_k requires a 2-dissociated base set");
  }
  // C(|D|,k) * 2^k within budget
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) {
    count = count * (D.size() - i) / (i + 1);
    if (count > budget.max_ops) fail(Errc::BudgetExceeded, "E_k enumeration too large");
  }
  count = pow_capped(2, static_cast<unsigned>(k), budget.max_ops / std::max<std::uint64_t>(count, 1)) * count;
  if (count > budget.max_ops) fail(Errc::BudgetExceeded, "E_k enumeration too large");

  std::vector<SignedSum> out;
  if (k == 0) {
    out.push_back({0, {}, 0});
    return out;
  }
  std::vector<std::size_t> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      SignedSum s;
      s.weight = k;
      for (int i = 0; i < k; ++i) {
        int sign = (mask >> i) & 1 ? -1 : 1;
        s.value += sign * D[idx[i]];
        s.signs.emplace_back(D[idx[i]], sign);
      }
      out.push_back(std::move(s));
    }
    // next k-combination of indices
    int i = k - 1;
    while (i >= 0 && idx[i] == D.size() - static_cast<std::size_t>(k - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(),
            [](const SignedSum& a, const SignedSum& b) { return a.value < b.value; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].value == out[i - 1].value)
      throw std::logic_error("enumerate_Ek: duplicate signed sum in a 2-dissociated set");
  return out;
}

}  // namespace runnerlab
