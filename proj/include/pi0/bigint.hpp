#pragma once

#include <cassert>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pi0 {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline bool is_zero(const BigInt& x) { return mpz_sgn(x.get_mpz_t()) == 0; }
inline bool is_zero(const BigRat& x) { return mpq_sgn(x.get_mpq_t()) == 0; }

inline BigInt one_like(const BigInt&) { return BigInt(1); }
inline BigRat one_like(const BigRat&) { return BigRat(1); }

// Checked exact quotient.  Pseudo-remainder sequences, Bareiss pivots and
// cyclotomic factor removal all divide exactly by construction; a non-exact
// division here means a broken invariant, so it throws rather than truncating.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (is_zero(b)) throw std::invalid_argument("exact_div: zero divisor");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (!is_zero(r)) throw std::logic_error("exact_div: division is not exact");
  return q;
}

inline BigRat exact_div(const BigRat& a, const BigRat& b) {
  if (is_zero(b)) throw std::invalid_argument("exact_div: zero divisor");
  return a / b;
}

template <class T>
T ring_pow(T base, unsigned long e) {
  T acc = one_like(base);
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return acc;
}

// num/den with canonical sign and lowest terms.
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (is_zero(den)) throw std::invalid_argument("make_rat: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const BigRat& x) { return x.get_str(); }

}  // namespace pi0
