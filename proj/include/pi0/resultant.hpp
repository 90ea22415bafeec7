#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "pi0/poly.hpp"
#include "pi0/prime_field.hpp"

namespace pi0 {

// Resultant via the subresultant pseudo-remainder sequence (fraction-free;
// every division is exact in T).  Equals the Sylvester-matrix determinant,
// so Res(a,b) = lc(a)^deg(b) * prod b over roots of a, and
// Res(a,b) = (-1)^(deg a * deg b) Res(b,a).  Zero inputs are rejected.
template <class T>
T resultant(Poly<T> a, Poly<T> b) {
  if (a.is_zero_poly() || b.is_zero_poly())
    throw std::invalid_argument("resultant: zero polynomial");
  bool neg = false;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) neg = true;
  }
  if (b.degree() == 0) {
    T r = ring_pow(b.lead(), static_cast<unsigned long>(a.degree()));
    return neg ? -r : r;
  }
  T g = one_like(a.lead());
  T h = g;
  while (true) {
    const int da = a.degree(), db = b.degree();
    const int delta = da - db;
    if ((da & 1) && (db & 1)) neg = !neg;
    Poly<T> r = prem(a, b);
    a = std::move(b);
    T scale(g * ring_pow(h, static_cast<unsigned long>(delta)));
    b = exact_div_scalar(r, scale);
    g = a.lead();
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exact_div(ring_pow(g, static_cast<unsigned long>(delta)),
                    ring_pow(h, static_cast<unsigned long>(delta - 1)));
    if (b.is_zero_poly()) return T{};
    if (b.degree() == 0) {
      const int q = a.degree();
      T num = ring_pow(b.lead(), static_cast<unsigned long>(q));
      T res = (q == 1) ? num : exact_div(num, ring_pow(h, static_cast<unsigned long>(q - 1)));
      return neg ? -res : res;
    }
  }
}

inline std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t i = 1; i * i <= m; ++i)
    if (m % i == 0) {
      d.push_back(i);
      if (i != m / i) d.push_back(m / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

// m-th cyclotomic polynomial over Z by iterated exact division:
// x^m - 1 = prod_{d | m} Phi_d.
inline IntPoly cyclotomic(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("cyclotomic: m must be positive");
  std::map<std::uint64_t, IntPoly> phi;
  for (std::uint64_t d : divisors(m)) {
    IntPoly q = IntPoly::monomial(BigInt(1), static_cast<int>(d)) - IntPoly{BigInt(1)};
    for (const auto& [e, p] : phi)
      if (d % e == 0) q = exact_div(q, p);
    phi.emplace(d, std::move(q));
  }
  return phi.at(m);
}

// Map an integer polynomial into the coefficient ring of `sample`
// (coefficientwise), e.g. reduce mod ell by passing a bound Fp.
template <class T>
Poly<T> embed_int_poly(const IntPoly& p, const T& sample);

template <>
inline Poly<BigInt> embed_int_poly(const IntPoly& p, const BigInt&) {
  return p;
}
template <>
inline Poly<BigRat> embed_int_poly(const IntPoly& p, const BigRat&) {
  return map_coeffs<BigRat>(p, [](const BigInt& c) { return BigRat(c); });
}
template <>
inline Poly<Fp> embed_int_poly(const IntPoly& p, const Fp& sample) {
  if (!sample.bound()) throw std::logic_error("embed_int_poly: unbound Fp sample");
  const std::uint64_t ell = sample.mod;
  return map_coeffs<Fp>(p, [ell](const BigInt& c) {
    std::uint64_t r = mpz_fdiv_ui(c.get_mpz_t(), ell);
    return Fp(ell, static_cast<std::int64_t>(r));
  });
}

// Coefficientwise reduction mod a prime ell.
inline Poly<Fp> reduce_mod(const IntPoly& p, std::uint64_t ell) {
  ensure_prime(ell);
  return embed_int_poly(p, Fp(ell, 0));
}

}  // namespace pi0
