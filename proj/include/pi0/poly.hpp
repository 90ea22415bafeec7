#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pi0/bigint.hpp"

namespace pi0 {

// Dense univariate polynomial over an exact coefficient ring T.  T must
// provide +, -, *, ==, and the free functions is_zero / one_like / exact_div.
// Coefficients are stored ascending with no trailing zeros; the zero
// polynomial has empty storage and degree -1.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(T v) {
    std::vector<T> c;
    c.push_back(std::move(v));
    return Poly(std::move(c));
  }
  // lead * x^k
  static Poly monomial(T lead, int k) {
    if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
    std::vector<T> c(static_cast<std::size_t>(k) + 1);
    c.back() = std::move(lead);
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }

  T coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return T{};
    return c_[static_cast<std::size_t>(i)];
  }
  const T& lead() const {
    if (c_.empty()) throw std::logic_error("Poly::lead: zero polynomial");
    return c_.back();
  }
  T constant_term() const { return coeff(0); }

  bool is_monic() const { return !c_.empty() && c_.back() == one_like(c_.back()); }

  const std::vector<T>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
  }
  Poly operator-() const {
    std::vector<T> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const T& s) {
    std::vector<T> c(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i] * s;
    return Poly(std::move(c));
  }
  friend Poly operator*(const T& s, const Poly& a) { return a * s; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // p(x) * x^k
  Poly shifted(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::shifted: negative shift");
    if (is_zero_poly()) return Poly();
    std::vector<T> c(c_.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + static_cast<std::size_t>(k)] = c_[i];
    return Poly(std::move(c));
  }

  // Coefficient reversal x^deg * p(1/x).  Degree drops if the constant term
  // vanishes.
  Poly reversed() const {
    std::vector<T> c(c_.rbegin(), c_.rend());
    return Poly(std::move(c));
  }

  T eval(const T& x) const {
    if (c_.empty()) return T{};
    T acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

 private:
  void normalize() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.is_zero_poly();
}
template <class T>
Poly<T> one_like(const Poly<T>& p) {
  if (!p.is_zero_poly()) return Poly<T>::constant(one_like(p.lead()));
  return Poly<T>::constant(one_like(T{}));
}

template <class T>
Poly<T> poly_pow(const Poly<T>& base, unsigned long e) {
  Poly<T> acc = one_like(base);
  Poly<T> b = base;
  while (e) {
    if (e & 1u) acc = acc * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return acc;
}

// Quotient when b | a in T[x]; throws if any coefficient step or the final
// remainder is not exact.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero_poly()) throw std::invalid_argument("Poly exact_div: zero divisor");
  if (a.is_zero_poly()) return Poly<T>();
  if (a.degree() < b.degree()) throw std::logic_error("Poly exact_div: division is not exact");
  std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  Poly<T> r = a;
  while (!r.is_zero_poly() && r.degree() >= b.degree()) {
    T t = exact_div(r.lead(), b.lead());
    int k = r.degree() - b.degree();
    q[static_cast<std::size_t>(k)] = t;
    r = r - (b * t).shifted(k);
  }
  if (!r.is_zero_poly()) throw std::logic_error("Poly exact_div: division is not exact");
  return Poly<T>(std::move(q));
}

// Coefficientwise exact division by a scalar.
template <class T>
Poly<T> exact_div_scalar(const Poly<T>& a, const T& s) {
  std::vector<T> c(static_cast<std::size_t>(a.degree() + 1));
  for (int i = 0; i <= a.degree(); ++i) c[static_cast<std::size_t>(i)] = exact_div(a.coeff(i), s);
  return Poly<T>(std::move(c));
}

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a  mod  b.
template <class T>
Poly<T> prem(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero_poly()) throw std::invalid_argument("prem: zero divisor");
  if (a.degree() < b.degree()) throw std::logic_error("prem: deg a < deg b");
  long e = a.degree() - b.degree() + 1;
  const T d = b.lead();
  Poly<T> r = a;
  while (!r.is_zero_poly() && r.degree() >= b.degree()) {
    Poly<T> s = (b * r.lead()).shifted(r.degree() - b.degree());
    r = r * d - s;
    --e;
  }
  if (e > 0) r = r * ring_pow(d, static_cast<unsigned long>(e));
  return r;
}

template <class U, class T, class F>
Poly<U> map_coeffs(const Poly<T>& p, F&& f) {
  std::vector<U> c;
  c.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) c.push_back(f(p.coeff(i)));
  return Poly<U>(std::move(c));
}

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRat>;

// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (int i = 0; i <= p.degree(); ++i) {
    BigInt c = p.coeff(i);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

inline IntPoly primitive_part(const IntPoly& p) {
  BigInt c = content(p);
  if (is_zero(c)) return IntPoly();
  return exact_div_scalar(p, c);
}

template <class T>
std::string to_string(const Poly<T>& p, const std::string& var = "T") {
  if (p.is_zero_poly()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    T c = p.coeff(i);
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = cs == "1";
    if (i == 0) {
      out += cs;
    } else {
      if (!unit) out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace pi0
