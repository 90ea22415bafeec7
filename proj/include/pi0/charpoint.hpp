#pragma once

#include <stdexcept>
#include <vector>

#include "pi0/matrix.hpp"

namespace pi0 {

// Coefficient vector (alpha_1, ..., alpha_n) of a monic charpoly
// T^n + alpha_1 T^(n-1) + ... + alpha_n with alpha_n invertible, i.e. the
// image of an invertible matrix under the coefficient map.
template <class T>
struct CharPoint {
  std::vector<T> alpha;

  int n() const { return static_cast<int>(alpha.size()); }

  friend bool operator==(const CharPoint& a, const CharPoint& b) {
    if (a.alpha.size() != b.alpha.size()) return false;
    for (std::size_t i = 0; i < a.alpha.size(); ++i)
      if (!(a.alpha[i] == b.alpha[i])) return false;
    return true;
  }
};

template <class T>
CharPoint<T> charpoint_of_poly(const Poly<T>& p) {
  if (p.degree() < 1) throw std::invalid_argument("charpoint: degree must be >= 1");
  if (!p.is_monic()) throw std::invalid_argument("charpoint: polynomial must be monic");
  if (is_zero(p.constant_term()))
    throw std::invalid_argument("charpoint: constant term vanishes (matrix not invertible)");
  const int n = p.degree();
  std::vector<T> a(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) a[static_cast<std::size_t>(i - 1)] = p.coeff(n - i);
  return CharPoint<T>{std::move(a)};
}

// chi(g): coefficients of det(T*I - g); rejects singular g.
template <class T>
CharPoint<T> chi(const Mat<T>& g) {
  return charpoint_of_poly(charpoly(g));
}

template <class T>
Poly<T> poly_of_charpoint(const CharPoint<T>& c) {
  if (c.n() < 1) throw std::invalid_argument("charpoint: empty");
  const int n = c.n();
  std::vector<T> coeffs(static_cast<std::size_t>(n) + 1);
  T one;
  for (int i = 1; i <= n; ++i) {
    coeffs[static_cast<std::size_t>(n - i)] = c.alpha[static_cast<std::size_t>(i - 1)];
    one = one_like(c.alpha[static_cast<std::size_t>(i - 1)]);
  }
  coeffs[static_cast<std::size_t>(n)] = one;
  return Poly<T>(std::move(coeffs));
}

}  // namespace pi0
