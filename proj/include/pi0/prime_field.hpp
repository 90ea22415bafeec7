#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pi0/primes.hpp"

namespace pi0 {

// Element of F_ell with the modulus carried at runtime.  A default-constructed
// element is an "unbound" integer constant (mod == 0); it binds to the other
// operand's modulus on first arithmetic contact.  That keeps generic template
// code (zero/one literals inside polynomial and matrix kernels) working
// without threading the modulus through every call.
struct Fp {
  std::uint64_t mod = 0;   // 0 = unbound constant
  std::int64_t val = 0;    // canonical in [0, mod) when bound

  static constexpr std::uint64_t kMaxModulus = (1ull << 31) - 1;

  Fp() = default;
  Fp(std::uint64_t m, std::int64_t v) : mod(m) {
    if (m == 0) {
      val = v;
      return;
    }
    if (m > kMaxModulus) throw std::invalid_argument("Fp: modulus too large");
    std::int64_t r = v % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    val = r;
  }

  static Fp constant(std::int64_t c) {
    Fp x;
    x.val = c;
    return x;
  }

  bool bound() const { return mod != 0; }

  Fp bind(std::uint64_t m) const { return bound() ? *this : Fp(m, val); }

  friend std::uint64_t common_modulus(const Fp& a, const Fp& b) {
    if (a.mod && b.mod && a.mod != b.mod)
      throw std::logic_error("Fp: mixed moduli " + std::to_string(a.mod) + " and " +
                             std::to_string(b.mod));
    return a.mod ? a.mod : b.mod;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t m = common_modulus(a, b);
    if (!m) return constant(a.val + b.val);
    return Fp(m, a.bind(m).val + b.bind(m).val);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t m = common_modulus(a, b);
    if (!m) return constant(a.val - b.val);
    return Fp(m, a.bind(m).val - b.bind(m).val);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t m = common_modulus(a, b);
    if (!m) return constant(a.val * b.val);
    return Fp(m, a.bind(m).val * b.bind(m).val);
  }
  Fp operator-() const { return bound() ? Fp(mod, -val) : constant(-val); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint64_t m = common_modulus(a, b);
    if (!m) return a.val == b.val;
    return a.bind(m).val == b.bind(m).val;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  // Extended Euclid; requires a bound nonzero element.
  Fp inverse() const {
    if (!bound()) throw std::logic_error("Fp::inverse: unbound element");
    if (val == 0) throw std::domain_error("Fp::inverse: zero is not invertible");
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(mod), nr = val;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw std::domain_error("Fp::inverse: modulus not prime or element not a unit");
    return Fp(mod, t);
  }
};

inline bool is_zero(const Fp& x) { return x.val == 0; }
inline std::string to_string(const Fp& x) { return std::to_string(x.val); }
inline Fp one_like(const Fp& x) { return x.bound() ? Fp(x.mod, 1) : Fp::constant(1); }
inline Fp exact_div(const Fp& a, const Fp& b) {
  std::uint64_t m = common_modulus(a, b);
  if (!m) {
    if (b.val == 0) throw std::invalid_argument("exact_div: zero divisor");
    if (b.val == 1) return a;
    if (b.val == -1) return -a;
    if (a.val % b.val != 0) throw std::logic_error("exact_div: unbound Fp division not exact");
    return Fp::constant(a.val / b.val);
  }
  return a.bind(m) * b.bind(m).inverse();
}

// Euler criterion: 1, -1, or 0.
inline int legendre_symbol(std::int64_t a, std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("legendre_symbol: p must be odd");
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  if (r == 0) return 0;
  std::uint64_t e = powmod_u64(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

inline std::uint64_t smallest_non_residue(std::uint64_t p) {
  for (std::uint64_t a = 2; a < p; ++a)
    if (legendre_symbol(static_cast<std::int64_t>(a), p) == -1) return a;
  throw std::invalid_argument("smallest_non_residue: no non-residue mod " + std::to_string(p));
}

// Checked handle for F_ell; primality is verified once here, elements made
// through it are always bound.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t ell) : ell_(ell) {
    ensure_prime(ell, "field characteristic");
    if (ell > Fp::kMaxModulus) throw std::invalid_argument("PrimeField: characteristic too large");
  }
  std::uint64_t characteristic() const { return ell_; }
  Fp operator()(std::int64_t v) const { return Fp(ell_, v); }
  Fp zero() const { return Fp(ell_, 0); }
  Fp one() const { return Fp(ell_, 1); }

 private:
  std::uint64_t ell_;
};

}  // namespace pi0
