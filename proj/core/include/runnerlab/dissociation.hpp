#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "runnerlab/speed_set.hpp"

namespace runnerlab {

// A nontrivial vanishing combination sum(coeff * element) == 0 with
// coefficients in {-k..k} (taken mod p when a modulus is given).
struct Relation {
  std::vector<std::pair<std::int64_t, int>> coefficients;  // (element, coeff), input order
  int order = 0;                                           // k
  std::int64_t modulus = 0;                                // 0 = over the integers

  bool verifies() const;  // recomputes the sum and the nontriviality
};

struct DissociationBudget {
  std::size_t max_elements = 24;
  // Cap on enumerated coefficient vectors per meet-in-the-middle side /
  // DFS leaf count.
  std::uint64_t max_ops = std::uint64_t{1} << 25;
};

// nullopt when D is k-dissociated; otherwise one witnessing relation.
// modulus = 0 searches over Z, otherwise over Z/modulus.
std::optional<Relation> find_relation(std::span<const std::int64_t> D, int k,
                                      const DissociationBudget& budget = {},
                                      std::int64_t modulus = 0);

bool is_k_dissociated(std::span<const std::int64_t> D, int k,
                      const DissociationBudget& budget = {}, std::int64_t modulus = 0);

struct DimensionResult {
  int dimension = 0;
  std::vector<std::int64_t> witness;
};

// Largest 2-dissociated subset (lexicographically smallest among maximum-size
// witnesses).
DimensionResult dim2(const SpeedSet& V, const DissociationBudget& budget = {});
DimensionResult dim2_of(std::span<const std::int64_t> elems, const DissociationBudget& budget = {},
                        std::int64_t modulus = 0);

// Minimum-cardinality inclusion-maximal 2-dissociated subset.
DimensionResult dim2_minus(const SpeedSet& V, const DissociationBudget& budget = {});
DimensionResult dim2_minus_of(std::span<const std::int64_t> elems,
                              const DissociationBudget& budget = {}, std::int64_t modulus = 0);

// All signed sums with coefficients in {-2..2}; {0} for the empty set.
std::vector<std::int64_t> span2(std::span<const std::int64_t> D,
                                const DissociationBudget& budget = {});
// Same over Z/p, as centered representatives in (-p/2, p/2).
std::vector<std::int64_t> span2_mod(std::span<const std::int64_t> D, std::int64_t p,
                                    const DissociationBudget& budget = {});

// A signed sum of exactly `weight` distinct elements with signs +-1.
struct SignedSum {
  std::int64_t value = 0;
  std::vector<std::pair<std::int64_t, int>> signs;  // (element, +-1)
  int weight = 0;
};

// E_k of a 2-dissociated set: all C(|D|,k) * 2^k signed sums with exactly k
// nonzero coefficients. Sorted by value.
std::vector<SignedSum> enumerate_Ek(std::span<const std::int64_t> D, int k,
                                    const DissociationBudget& budget = {});

}  // namespace runnerlab
