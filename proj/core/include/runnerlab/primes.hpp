#pragma once

#include <cstdint>
#include <vector>

namespace runnerlab {

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::int64_t n);

std::vector<std::int64_t> primes_up_to(std::int64_t n);

// Smallest prime p with lo < p <= hi, or 0 when the window is empty.
std::int64_t smallest_prime_in(std::int64_t lo, std::int64_t hi);

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

// Representative of x mod p in (-p/2, p/2), p odd.
std::int64_t centered_rep(std::int64_t x, std::int64_t p);

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m);

}  // namespace runnerlab
