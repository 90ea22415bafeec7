#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pi0/poly.hpp"

namespace pi0 {

// Square matrix over an exact ring T (same ring requirements as Poly<T>).
template <class T>
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("Mat: negative size");
  }
  Mat(int n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
    if (n < 0 || a_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
      throw std::invalid_argument("Mat: entry count does not match size");
  }

  static Mat identity_like(int n, const T& one) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }
  static Mat identity(int n) { return identity_like(n, one_like(T{})); }

  int size() const { return n_; }

  T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)]; }
  const T& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
  }
  const std::vector<T>& entries() const { return a_; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Mat: size mismatch");
    Mat c(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const T& aik = a.at(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < a.n_; ++j) c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
      }
    return c;
  }
  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Mat: size mismatch");
    Mat c(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Mat: size mismatch");
    Mat c(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat transpose() const {
    Mat c(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) c.at(j, i) = at(i, j);
    return c;
  }

  T trace() const {
    T t{};
    for (int i = 0; i < n_; ++i) t = t + at(i, i);
    return t;
  }

 private:
  int n_ = 0;
  std::vector<T> a_;
};

template <class T>
Mat<T> mat_pow(const Mat<T>& base, unsigned long e, const T& one) {
  Mat<T> acc = Mat<T>::identity_like(base.size(), one);
  Mat<T> b = base;
  while (e) {
    if (e & 1u) acc = acc * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return acc;
}

// Samuelson-Berkowitz: division-free characteristic polynomial det(T*I - M),
// monic of degree n, valid over any commutative ring (in particular F_ell
// with ell <= n, where Gaussian elimination on T*I - M would divide by zero
// divisors).  Recursion on the trailing principal submatrix B:
//   chi_M(T) = (T - a) chi_B(T) - R adj(T*I - B) C,
// with adj(T*I - B) accumulated from chi_B's own coefficients by a Horner
// recurrence, so each level costs O(n^3) ring operations.
template <class T>
Poly<T> charpoly(const Mat<T>& m) {
  const int n = m.size();
  if (n == 0) throw std::invalid_argument("charpoly: empty matrix");
  if (n == 1) return Poly<T>{-m.at(0, 0), one_like(m.at(0, 0))};

  const int k = n - 1;
  Mat<T> b(k);
  std::vector<T> row(static_cast<std::size_t>(k)), col(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    row[static_cast<std::size_t>(i)] = m.at(0, i + 1);
    col[static_cast<std::size_t>(i)] = m.at(i + 1, 0);
    for (int j = 0; j < k; ++j) b.at(i, j) = m.at(i + 1, j + 1);
  }
  Poly<T> q = charpoly(b);

  // v_{k-1} = C;  v_{j-1} = B v_j + q_j C;  correction coeff of T^j is R.v_j.
  std::vector<T> corr(static_cast<std::size_t>(k));
  std::vector<T> v = col;
  for (int j = k - 1; j >= 0; --j) {
    T s{};
    for (int i = 0; i < k; ++i) s = s + row[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    corr[static_cast<std::size_t>(j)] = s;
    if (j > 0) {
      std::vector<T> nv(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        T acc = q.coeff(j) * col[static_cast<std::size_t>(i)];
        for (int l = 0; l < k; ++l) acc = acc + b.at(i, l) * v[static_cast<std::size_t>(l)];
        nv[static_cast<std::size_t>(i)] = acc;
      }
      v = std::move(nv);
    }
  }

  Poly<T> tq = q.shifted(1) - q * m.at(0, 0);
  return tq - Poly<T>(std::move(corr));
}

// det via the division-free charpoly: det(M) = (-1)^n chi(0).
template <class T>
T det(const Mat<T>& m) {
  T c0 = charpoly(m).constant_term();
  return (m.size() % 2 == 0) ? c0 : -c0;
}

// Kronecker product; index (i,k) -> i*m + k so eigenvalue pairing is
// lexicographic.
template <class T>
Mat<T> kronecker(const Mat<T>& a, const Mat<T>& b) {
  const int n = a.size(), m = b.size();
  Mat<T> c(n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (is_zero(a.at(i, j))) continue;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) c.at(i * m + k, j * m + l) = a.at(i, j) * b.at(k, l);
    }
  return c;
}

template <class T>
Mat<T> block_diag(const Mat<T>& a, const Mat<T>& b) {
  const int n = a.size(), m = b.size();
  Mat<T> c(n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c.at(n + i, n + j) = b.at(i, j);
  return c;
}

// Gauss-Jordan inverse; requires T to be a field (exact_div is true division
// there: F_ell elements or rationals).
template <class T>
Mat<T> inverse(const Mat<T>& m) {
  const int n = m.size();
  Mat<T> a = m;
  Mat<T> inv = Mat<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(a.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    T d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = exact_div(a.at(col, j), d);
      inv.at(col, j) = exact_div(inv.at(col, j), d);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(a.at(r, col))) continue;
      T f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) = a.at(r, j) - f * a.at(col, j);
        inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

template <class T>
Mat<T> conjugate(const Mat<T>& g, const Mat<T>& x) {
  return g * x * inverse(g);
}

// Companion matrix of a monic polynomial; charpoly(companion(p)) == p.
template <class T>
Mat<T> companion(const Poly<T>& p) {
  if (p.degree() < 1) throw std::invalid_argument("companion: degree must be >= 1");
  if (!p.is_monic()) throw std::invalid_argument("companion: polynomial must be monic");
  const int n = p.degree();
  Mat<T> c(n);
  for (int i = 0; i + 1 < n; ++i) c.at(i + 1, i) = one_like(p.lead());
  for (int i = 0; i < n; ++i) c.at(i, n - 1) = -p.coeff(i);
  return c;
}

template <class T>
std::string to_string(const Mat<T>& m) {
  std::string out = "[";
  for (int i = 0; i < m.size(); ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < m.size(); ++j) {
      if (j) out += ", ";
      out += to_string(m.at(i, j));
    }
  }
  return out + "]";
}

}  // namespace pi0
