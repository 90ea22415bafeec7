#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pi0/bigint.hpp"
#include "pi0/charpoint.hpp"
#include "pi0/prime_field.hpp"
#include "pi0/primes.hpp"

namespace pi0 {

struct singular_curve_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct bad_prime_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// y^2 = x^3 + A x + B over Q.
struct CurveSpec {
  long long A = 0;
  long long B = 0;
  std::string label;

  BigInt discriminant() const {
    BigInt a(static_cast<long>(A)), b(static_cast<long>(B));
    return BigInt(-16) * (BigInt(4) * a * a * a + BigInt(27) * b * b);
  }
  void validate() const {
    if (is_zero(discriminant()))
      throw singular_curve_error("curve y^2 = x^3 + " + std::to_string(A) + "x + " +
                                 std::to_string(B) + " is singular");
  }
};

// One good prime of Frobenius data; charpoly convention T^2 - a_p T + p.
struct FrobeniusRecord {
  std::uint64_t p = 0;
  long long ap = 0;

  IntPoly charpoly() const {
    return IntPoly{BigInt(p), BigInt(static_cast<long>(-ap)), BigInt(1)};
  }
  CharPoint<BigInt> alpha() const {
    return CharPoint<BigInt>{{BigInt(static_cast<long>(-ap)), BigInt(p)}};
  }

  friend bool operator==(const FrobeniusRecord& a, const FrobeniusRecord& b) {
    return a.p == b.p && a.ap == b.ap;
  }
};

inline bool hasse_ok(std::uint64_t p, long long ap) {
  unsigned long long a = ap < 0 ? 0ull - static_cast<unsigned long long>(ap)
                                : static_cast<unsigned long long>(ap);
  return static_cast<unsigned __int128>(a) * a <= static_cast<unsigned __int128>(4) * p;
}

// The finite exceptional set for a run: primes of bad reduction (below the
// cutoff in play) plus, when reducing mod ell, the residue characteristic.
struct BadPrimes {
  std::set<std::uint64_t> primes;
  std::optional<std::uint64_t> residue_char;

  bool contains(std::uint64_t p) const {
    return primes.count(p) > 0 || (residue_char && *residue_char == p);
  }
};

inline BadPrimes bad_primes(const CurveSpec& curve, std::uint64_t cutoff,
                            std::optional<std::uint64_t> ell = std::nullopt) {
  curve.validate();
  BadPrimes out;
  out.residue_char = ell;
  const BigInt delta = curve.discriminant();
  for (std::uint64_t p : primes_below(cutoff))
    if (p == 2 || mpz_divisible_ui_p(delta.get_mpz_t(), p)) out.primes.insert(p);
  if (cutoff > 2) out.primes.insert(2);
  return out;
}

namespace detail {

// #E(F_p) with a y^2-solution-count table; scratch is reused across primes.
inline std::uint64_t count_points_impl(const CurveSpec& curve, std::uint64_t p,
                                       std::vector<std::uint8_t>& ysq_count) {
  const std::uint64_t a = static_cast<std::uint64_t>(((curve.A % static_cast<long long>(p)) +
                                                      static_cast<long long>(p)) %
                                                     static_cast<long long>(p));
  const std::uint64_t b = static_cast<std::uint64_t>(((curve.B % static_cast<long long>(p)) +
                                                      static_cast<long long>(p)) %
                                                     static_cast<long long>(p));
  ysq_count.assign(p, 0);
  for (std::uint64_t y = 0; y <= (p - 1) / 2; ++y) {
    std::uint64_t v = (y * y) % p;
    ysq_count[v] = static_cast<std::uint8_t>(y == 0 || 2 * y == p ? 1 : 2);
  }
  std::uint64_t n = 1;  // point at infinity
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t fx = ((x * x % p) * x + a * x + b) % p;
    n += ysq_count[fx];
  }
  return n;
}

}  // namespace detail

// Exact #E(F_p), O(p) time and memory; p must be an odd good prime.
inline std::uint64_t count_points(const CurveSpec& curve, std::uint64_t p) {
  curve.validate();
  if (!is_prime_u64(p)) throw bad_prime_error("count_points: " + std::to_string(p) + " is not prime");
  if (p == 2 || mpz_divisible_ui_p(curve.discriminant().get_mpz_t(), p))
    throw bad_prime_error("count_points: bad reduction at " + std::to_string(p));
  if (p > Fp::kMaxModulus) throw bad_prime_error("count_points: prime too large");
  std::vector<std::uint8_t> scratch;
  return detail::count_points_impl(curve, p, scratch);
}

inline long long trace_of_frobenius(const CurveSpec& curve, std::uint64_t p) {
  return static_cast<long long>(p) + 1 - static_cast<long long>(count_points(curve, p));
}

// Records for every good prime p < cutoff, ascending; bad primes are the side
// channel bad_primes() reports, never silently dropped rows.
inline std::vector<FrobeniusRecord> frobenius_stream(const CurveSpec& curve, std::uint64_t cutoff) {
  if (cutoff < 3) throw std::invalid_argument("frobenius_stream: cutoff must be >= 3");
  curve.validate();
  const BigInt delta = curve.discriminant();
  std::vector<FrobeniusRecord> out;
  std::vector<std::uint8_t> scratch;
  for (std::uint64_t p : primes_below(cutoff)) {
    if (p == 2 || mpz_divisible_ui_p(delta.get_mpz_t(), p)) continue;
    std::uint64_t n = detail::count_points_impl(curve, p, scratch);
    long long ap = static_cast<long long>(p) + 1 - static_cast<long long>(n);
    if (!hasse_ok(p, ap))
      throw std::logic_error("frobenius_stream: Hasse bound violated at p = " + std::to_string(p));
    out.push_back(FrobeniusRecord{p, ap});
  }
  return out;
}

// Mod-ell charpoint (-a_p, p); the residue characteristic itself is excluded.
inline CharPoint<Fp> reduce_record(const FrobeniusRecord& r, std::uint64_t ell) {
  ensure_prime(ell);
  if (r.p == ell)
    throw std::domain_error("reduce_record: p = ell = " + std::to_string(ell) + " is excluded");
  return CharPoint<Fp>{{Fp(ell, -r.ap), Fp(ell, static_cast<std::int64_t>(r.p % ell))}};
}

}  // namespace pi0
