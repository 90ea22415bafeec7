#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pi0/charpoint.hpp"
#include "pi0/resultant.hpp"

namespace pi0 {

// One tensor-construction factor: the space V^(x)a (x) (V^dual)^(x)b together
// with the order m of the root of unity whose occurrence among eigenvalue
// ratio products the detector tests for.
struct TensorFactor {
  int a = 0;
  int b = 0;
  int m = 2;
};

struct TensorSpec {
  std::vector<TensorFactor> factors;

  void validate() const {
    if (factors.empty()) throw std::invalid_argument("TensorSpec: empty factor list");
    for (const auto& f : factors) {
      if (f.a < 0 || f.b < 0) throw std::invalid_argument("TensorSpec: a, b must be nonnegative");
      if (f.a + f.b < 1) throw std::invalid_argument("TensorSpec: a + b must be >= 1");
      if (f.m < 2) throw std::invalid_argument("TensorSpec: m must be >= 2");
    }
  }

  std::string str() const {
    std::string out;
    for (const auto& f : factors) {
      if (!out.empty()) out += ";";
      out += std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.m);
    }
    return out;
  }
};

// Shipped presets:
//   cartan2: [(1,1,2)] — flags an eigenvalue ratio of order 2, the detector
//            for the nontrivial component of a GL_2 Cartan normalizer.
//   order2:  [(1,0,2)] — flags an eigenvalue of order 2.
inline TensorSpec tensor_spec_preset(const std::string& name) {
  if (name == "cartan2") return TensorSpec{{TensorFactor{1, 1, 2}}};
  if (name == "order2") return TensorSpec{{TensorFactor{1, 0, 2}}};
  throw std::invalid_argument("unknown tensor spec preset: " + name);
}

// Accepts a preset name or explicit semicolon-separated triples "a,b,m;a,b,m".
inline TensorSpec parse_tensor_spec(const std::string& text) {
  if (text.find(',') == std::string::npos) return tensor_spec_preset(text);
  TensorSpec spec;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    TensorFactor f;
    char c1 = 0, c2 = 0;
    std::stringstream ps(part);
    if (!(ps >> f.a >> c1 >> f.b >> c2 >> f.m) || c1 != ',' || c2 != ',' || (ps >> part))
      throw std::invalid_argument("bad tensor spec triple: '" + part + "'");
    spec.factors.push_back(f);
  }
  spec.validate();
  return spec;
}

// Polynomial whose roots are all pairwise products of the roots of p and q,
// via the resultant composition Res_x(p(x), x^deg(q) * q(T/x)); no root
// extraction.  Leading coefficient is lc(p)^deg(q) * lc(q)^deg(p).
// Requires q(0) != 0 (a zero root of q would drop the x-degree).
template <class T>
Poly<T> composed_product(const Poly<T>& p, const Poly<T>& q) {
  if (p.degree() < 1 || q.degree() < 1)
    throw std::invalid_argument("composed_product: degrees must be >= 1");
  if (is_zero(q.constant_term()))
    throw std::invalid_argument("composed_product: second factor has zero constant term");
  const int n = p.degree(), m = q.degree();
  std::vector<Poly<T>> ax(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) ax[static_cast<std::size_t>(i)] = Poly<T>::constant(p.coeff(i));
  std::vector<Poly<T>> bx(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j)
    bx[static_cast<std::size_t>(j)] = Poly<T>::monomial(q.coeff(m - j), m - j);
  return resultant(Poly<Poly<T>>(std::move(ax)), Poly<Poly<T>>(std::move(bx)));
}

namespace detail {
template <class T>
void require_monic_invertible(const Poly<T>& c, const char* who) {
  if (c.degree() < 1) throw std::invalid_argument(std::string(who) + ": degree must be >= 1");
  if (!c.is_monic()) throw std::invalid_argument(std::string(who) + ": input must be monic");
  if (is_zero(c.constant_term()))
    throw std::invalid_argument(std::string(who) + ": constant term vanishes");
}
}  // namespace detail

// Monic polynomial with roots 1/lambda_i, returned as primitive integer
// polynomial plus the cleared content |c(0)|.
struct DualCharpoly {
  IntPoly primitive;
  BigInt content;
};

inline DualCharpoly dual_charpoly(const IntPoly& c) {
  detail::require_monic_invertible(c, "dual_charpoly");
  IntPoly r = c.reversed();
  if (mpz_sgn(r.lead().get_mpz_t()) < 0) r = -r;
  return DualCharpoly{std::move(r), abs(c.constant_term())};
}

// Degree-nm monic polynomial with roots all products of roots of c and d.
template <class T>
Poly<T> tensor_charpoly(const Poly<T>& c, const Poly<T>& d) {
  detail::require_monic_invertible(c, "tensor_charpoly");
  detail::require_monic_invertible(d, "tensor_charpoly");
  return composed_product(c, d);
}

// Characteristic polynomial of g on V^(x)a (x) (V^dual)^(x)b given only
// c = charpoly(g): roots are all products of a eigenvalues over b eigenvalues,
// with denominators cleared by exactly c(0)^(b * n^(a+b-1)).  Built from
// iterated composed products of c and its reversal rev(c) = c(0) * (monic
// inverse-root polynomial); the chain's leading coefficients multiply out to
// precisely that clearing power.
template <class T>
Poly<T> p_ab(const Poly<T>& c, int a, int b) {
  detail::require_monic_invertible(c, "p_ab");
  if (a < 0 || b < 0) throw std::invalid_argument("p_ab: a, b must be nonnegative");
  if (a + b < 1) throw std::invalid_argument("p_ab: a + b must be >= 1");

  Poly<T> u, v;
  if (a > 0) {
    u = c;
    for (int i = 1; i < a; ++i) u = composed_product(u, c);
  }
  if (b > 0) {
    const Poly<T> r = c.reversed();
    v = r;
    for (int i = 1; i < b; ++i) v = composed_product(v, r);
  }
  if (a == 0) return v;
  if (b == 0) return u;
  return composed_product(u, v);
}

// Res_T(Phi_m, p_ab) = product of p_ab over the primitive m-th roots of
// unity; zero exactly when some eigenvalue ratio product has order m.
template <class T>
T q_ab(const Poly<T>& c, int a, int b, int m) {
  if (m < 2) throw std::invalid_argument("q_ab: m must be >= 2");
  Poly<T> p = p_ab(c, a, b);
  Poly<T> phi = embed_int_poly(cyclotomic(static_cast<std::uint64_t>(m)), c.lead());
  return resultant(phi, p);
}

// The component detector: product of q_ab over the factors of spec, evaluated
// at the charpoint carried by c.  Vanishes when any factor's root-of-unity
// condition is met; nonzero at the identity charpoint for every valid spec.
template <class T>
T serre_f_eval(const Poly<T>& c, const TensorSpec& spec) {
  spec.validate();
  detail::require_monic_invertible(c, "serre_f_eval");
  T acc = one_like(c.lead());
  for (const auto& f : spec.factors) {
    acc = acc * q_ab(c, f.a, f.b, f.m);
    if (is_zero(acc)) return acc;  // exact zero; later factors cannot undo it
  }
  return acc;
}

template <class T>
T serre_f_eval(const CharPoint<T>& alpha, const TensorSpec& spec) {
  return serre_f_eval(poly_of_charpoint(alpha), spec);
}

}  // namespace pi0
