#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pi0 {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1u) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1u;
  }
  return r;
}

// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline void ensure_prime(std::uint64_t ell, const char* what = "modulus") {
  if (!is_prime_u64(ell))
    throw std::invalid_argument(std::string(what) + " must be prime, got " + std::to_string(ell));
}

// Primes p <= limit, ascending.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> comp(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (!comp[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (!comp[i]) out.push_back(i);
  return out;
}

// Primes p < cutoff (strict), ascending.
inline std::vector<std::uint64_t> primes_below(std::uint64_t cutoff) {
  if (cutoff == 0) return {};
  return primes_up_to(cutoff - 1);
}

}  // namespace pi0
