#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pi0/bigint.hpp"
#include "pi0/matrix.hpp"
#include "pi0/prime_field.hpp"

namespace pi0 {

struct budget_exceeded_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GroupFamily {
  GL,
  SL,
  Sp,
  GSp,
  Torus,                     // split G_m^r as diagonal matrices
  CartanSplitNormalizer,     // N(split maximal torus) in GL_2
  CartanNonsplitNormalizer,  // N(nonsplit maximal torus) in GL_2
};

// A supported algebraic group together with its F_ell points.  Dimension,
// rank and connectedness are declared attributes of the family, not
// computed.
struct GroupSpec {
  GroupFamily family = GroupFamily::GL;
  int param = 1;  // n for GL/SL, g for Sp/GSp, r for Torus; ignored for Cartans
  std::uint64_t ell = 3;

  static GroupSpec make(GroupFamily f, int param, std::uint64_t ell) {
    ensure_prime(ell, "group characteristic");
    GroupSpec g{f, param, ell};
    if (param < 1) throw std::invalid_argument("GroupSpec: parameter must be >= 1");
    switch (f) {
      case GroupFamily::CartanSplitNormalizer:
      case GroupFamily::CartanNonsplitNormalizer:
        g.param = 2;
        if (ell < 3) throw std::invalid_argument("GroupSpec: Cartan normalizers need ell >= 3");
        break;
      default:
        break;
    }
    return g;
  }

  // Size of ambient matrices.
  int ambient() const {
    switch (family) {
      case GroupFamily::GL:
      case GroupFamily::SL:
        return param;
      case GroupFamily::Sp:
      case GroupFamily::GSp:
        return 2 * param;
      case GroupFamily::Torus:
        return param;
      case GroupFamily::CartanSplitNormalizer:
      case GroupFamily::CartanNonsplitNormalizer:
        return 2;
    }
    throw std::logic_error("GroupSpec: bad family");
  }

  int dimension() const {
    const int n = param, g = param, r = param;
    switch (family) {
      case GroupFamily::GL:
        return n * n;
      case GroupFamily::SL:
        return n * n - 1;
      case GroupFamily::Sp:
        return 2 * g * g + g;
      case GroupFamily::GSp:
        return 2 * g * g + g + 1;
      case GroupFamily::Torus:
        return r;
      case GroupFamily::CartanSplitNormalizer:
      case GroupFamily::CartanNonsplitNormalizer:
        return 2;  // dimension of the underlying torus
    }
    throw std::logic_error("GroupSpec: bad family");
  }

  int rank() const {
    switch (family) {
      case GroupFamily::GL:
        return param;
      case GroupFamily::SL:
        return param - 1;
      case GroupFamily::Sp:
        return param;
      case GroupFamily::GSp:
        return param + 1;
      case GroupFamily::Torus:
        return param;
      case GroupFamily::CartanSplitNormalizer:
      case GroupFamily::CartanNonsplitNormalizer:
        return 2;
    }
    throw std::logic_error("GroupSpec: bad family");
  }

  bool connected() const {
    return family != GroupFamily::CartanSplitNormalizer &&
           family != GroupFamily::CartanNonsplitNormalizer;
  }

  std::string name() const {
    switch (family) {
      case GroupFamily::GL:
        return "GL" + std::to_string(param);
      case GroupFamily::SL:
        return "SL" + std::to_string(param);
      case GroupFamily::Sp:
        return "Sp" + std::to_string(2 * param);
      case GroupFamily::GSp:
        return "GSp" + std::to_string(2 * param);
      case GroupFamily::Torus:
        return param == 1 ? "Gm" : "Gm^" + std::to_string(param);
      case GroupFamily::CartanSplitNormalizer:
        return "N(split Cartan)";
      case GroupFamily::CartanNonsplitNormalizer:
        return "N(nonsplit Cartan)";
    }
    throw std::logic_error("GroupSpec: bad family");
  }

  // Exact order by the standard product formulas.
  BigInt order() const {
    const BigInt q(static_cast<unsigned long>(ell));
    switch (family) {
      case GroupFamily::GL: {
        BigInt o(1), qn = ring_pow(q, static_cast<unsigned long>(param));
        for (int i = 0; i < param; ++i) o *= qn - ring_pow(q, static_cast<unsigned long>(i));
        return o;
      }
      case GroupFamily::SL: {
        GroupSpec gl{GroupFamily::GL, param, ell};
        return exact_div(gl.order(), q - 1);
      }
      case GroupFamily::Sp: {
        const int g = param;
        BigInt o = ring_pow(q, static_cast<unsigned long>(g * g));
        for (int i = 1; i <= g; ++i) o *= ring_pow(q, static_cast<unsigned long>(2 * i)) - 1;
        return o;
      }
      case GroupFamily::GSp: {
        GroupSpec sp{GroupFamily::Sp, param, ell};
        return (q - 1) * sp.order();
      }
      case GroupFamily::Torus:
        return ring_pow(BigInt(q - 1), static_cast<unsigned long>(param));
      case GroupFamily::CartanSplitNormalizer:
        return BigInt(2) * (q - 1) * (q - 1);
      case GroupFamily::CartanNonsplitNormalizer:
        return BigInt(2) * (q * q - 1);
    }
    throw std::logic_error("GroupSpec: bad family");
  }

  bool contains(const Mat<Fp>& m) const;

  // Candidates scanned by for_each (enumeration work, not group order).
  BigInt enumeration_cost() const {
    const BigInt q(static_cast<unsigned long>(ell));
    switch (family) {
      case GroupFamily::GL:
      case GroupFamily::SL:
        return ring_pow(q, static_cast<unsigned long>(param * param));
      case GroupFamily::Sp:
      case GroupFamily::GSp:
        return ring_pow(q, static_cast<unsigned long>(4 * param * param));
      case GroupFamily::Torus:
        return ring_pow(BigInt(q - 1), static_cast<unsigned long>(param));
      case GroupFamily::CartanSplitNormalizer:
        return BigInt(2) * (q - 1) * (q - 1);
      case GroupFamily::CartanNonsplitNormalizer:
        return BigInt(2) * (q * q - 1);
    }
    throw std::logic_error("GroupSpec: bad family");
  }

  // Visits every element exactly once, deterministic order; throws
  // budget_exceeded_error upfront when the candidate scan is too large.
  template <class F>
  void for_each(F&& fn, std::uint64_t budget = 5'000'000) const;
};

namespace detail {

inline Fp det2(const Mat<Fp>& m) { return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0); }

inline Fp det3(const Mat<Fp>& m) {
  return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
         m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
         m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

inline Fp det_fp(const Mat<Fp>& m) {
  switch (m.size()) {
    case 1:
      return m.at(0, 0);
    case 2:
      return det2(m);
    case 3:
      return det3(m);
    default:
      return det(m);
  }
}

// J = [[0, I_g], [-I_g, 0]]; S = m^T J m.  Returns lambda with S == lambda*J,
// or zero if m is not a symplectic similitude.
inline Fp similitude_factor(const Mat<Fp>& m, std::uint64_t ell) {
  const int n = m.size(), g = n / 2;
  Mat<Fp> jm(n);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < n; ++j) {
      jm.at(i, j) = m.at(g + i, j);
      jm.at(g + i, j) = -m.at(i, j);
    }
  Mat<Fp> s = m.transpose() * jm;
  Fp lambda = s.at(0, g);
  Fp zero(ell, 0), one(ell, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Fp expect = zero;
      if (j == i + g) expect = lambda;
      if (i == j + g) expect = -lambda;
      if (!(s.at(i, j) == expect)) return zero;
    }
  (void)one;
  return lambda;
}

}  // namespace detail

inline bool GroupSpec::contains(const Mat<Fp>& m) const {
  if (m.size() != ambient()) return false;
  for (const Fp& e : m.entries())
    if (e.bound() && e.mod != ell) return false;
  switch (family) {
    case GroupFamily::GL:
      return !is_zero(detail::det_fp(m));
    case GroupFamily::SL:
      return detail::det_fp(m) == Fp(ell, 1);
    case GroupFamily::Sp:
      return detail::similitude_factor(m, ell) == Fp(ell, 1);
    case GroupFamily::GSp:
      return !is_zero(detail::similitude_factor(m, ell));
    case GroupFamily::Torus: {
      for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
          if (i == j && is_zero(m.at(i, j))) return false;
          if (i != j && !is_zero(m.at(i, j))) return false;
        }
      return true;
    }
    case GroupFamily::CartanSplitNormalizer: {
      bool diag = !is_zero(m.at(0, 0)) && !is_zero(m.at(1, 1)) && is_zero(m.at(0, 1)) &&
                  is_zero(m.at(1, 0));
      bool anti = is_zero(m.at(0, 0)) && is_zero(m.at(1, 1)) && !is_zero(m.at(0, 1)) &&
                  !is_zero(m.at(1, 0));
      return diag || anti;
    }
    case GroupFamily::CartanNonsplitNormalizer: {
      const Fp eps(ell, static_cast<std::int64_t>(smallest_non_residue(ell)));
      bool comp1 = m.at(1, 1) == m.at(0, 0) && m.at(0, 1) == eps * m.at(1, 0);
      bool comp2 = m.at(1, 1) == -m.at(0, 0) && m.at(0, 1) == -(eps * m.at(1, 0));
      return (comp1 || comp2) && !is_zero(detail::det2(m));
    }
  }
  throw std::logic_error("GroupSpec: bad family");
}

template <class F>
void GroupSpec::for_each(F&& fn, std::uint64_t budget) const {
  if (enumeration_cost() > BigInt(static_cast<unsigned long>(budget)))
    throw budget_exceeded_error(name() + " over F_" + std::to_string(ell) + ": scan of " +
                                to_string(enumeration_cost()) + " candidates exceeds budget " +
                                std::to_string(budget));
  const std::int64_t q = static_cast<std::int64_t>(ell);
  switch (family) {
    case GroupFamily::GL:
    case GroupFamily::SL:
    case GroupFamily::Sp:
    case GroupFamily::GSp: {
      const int n = ambient();
      const int cells = n * n;
      std::vector<std::int64_t> digits(static_cast<std::size_t>(cells), 0);
      Mat<Fp> m(n);
      while (true) {
        for (int c = 0; c < cells; ++c) m.at(c / n, c % n) = Fp(ell, digits[static_cast<std::size_t>(c)]);
        if (contains(m)) fn(static_cast<const Mat<Fp>&>(m));
        int c = cells - 1;
        while (c >= 0 && digits[static_cast<std::size_t>(c)] == q - 1) digits[static_cast<std::size_t>(c--)] = 0;
        if (c < 0) break;
        ++digits[static_cast<std::size_t>(c)];
      }
      return;
    }
    case GroupFamily::Torus: {
      const int r = param;
      std::vector<std::int64_t> digits(static_cast<std::size_t>(r), 1);
      Mat<Fp> m = Mat<Fp>::identity_like(r, Fp(ell, 1));
      while (true) {
        for (int i = 0; i < r; ++i) m.at(i, i) = Fp(ell, digits[static_cast<std::size_t>(i)]);
        fn(static_cast<const Mat<Fp>&>(m));
        int i = r - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == q - 1) digits[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++digits[static_cast<std::size_t>(i)];
      }
      return;
    }
    case GroupFamily::CartanSplitNormalizer: {
      Mat<Fp> m(2);
      const Fp zero(ell, 0);
      for (std::int64_t a = 1; a < q; ++a)
        for (std::int64_t b = 1; b < q; ++b) {
          m.at(0, 0) = Fp(ell, a);
          m.at(1, 1) = Fp(ell, b);
          m.at(0, 1) = m.at(1, 0) = zero;
          fn(static_cast<const Mat<Fp>&>(m));
        }
      for (std::int64_t a = 1; a < q; ++a)
        for (std::int64_t b = 1; b < q; ++b) {
          m.at(0, 0) = m.at(1, 1) = zero;
          m.at(0, 1) = Fp(ell, a);
          m.at(1, 0) = Fp(ell, b);
          fn(static_cast<const Mat<Fp>&>(m));
        }
      return;
    }
    case GroupFamily::CartanNonsplitNormalizer: {
      const Fp eps(ell, static_cast<std::int64_t>(smallest_non_residue(ell)));
      Mat<Fp> m(2);
      for (int comp = 0; comp < 2; ++comp)
        for (std::int64_t x = 0; x < q; ++x)
          for (std::int64_t y = 0; y < q; ++y) {
            if (x == 0 && y == 0) continue;
            Fp fx(ell, x), fy(ell, y);
            if (comp == 0) {
              m.at(0, 0) = fx;
              m.at(0, 1) = eps * fy;
              m.at(1, 0) = fy;
              m.at(1, 1) = fx;
            } else {
              m.at(0, 0) = fx;
              m.at(0, 1) = eps * fy;
              m.at(1, 0) = -fy;
              m.at(1, 1) = -fx;
            }
            fn(static_cast<const Mat<Fp>&>(m));
          }
      return;
    }
  }
  throw std::logic_error("GroupSpec: bad family");
}

// Token grammar: gl<n>, sl<n>, sp4, gsp4, gm or gm<r>, cartan-split,
// cartan-nonsplit (case-insensitive).
inline GroupSpec parse_group(std::string token, std::uint64_t ell) {
  std::transform(token.begin(), token.end(), token.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  auto num_suffix = [&](std::size_t at, int dflt) {
    if (at >= token.size()) return dflt;
    int v = 0;
    for (std::size_t i = at; i < token.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(token[i])))
        throw std::invalid_argument("bad group token: " + token);
      v = v * 10 + (token[i] - '0');
    }
    return v;
  };
  if (token == "cartan-split") return GroupSpec::make(GroupFamily::CartanSplitNormalizer, 2, ell);
  if (token == "cartan-nonsplit")
    return GroupSpec::make(GroupFamily::CartanNonsplitNormalizer, 2, ell);
  if (token.rfind("gsp", 0) == 0) {
    int n = num_suffix(3, 4);
    if (n % 2 != 0) throw std::invalid_argument("GSp needs even matrix size, got " + token);
    return GroupSpec::make(GroupFamily::GSp, n / 2, ell);
  }
  if (token.rfind("gl", 0) == 0) return GroupSpec::make(GroupFamily::GL, num_suffix(2, 2), ell);
  if (token.rfind("sl", 0) == 0) return GroupSpec::make(GroupFamily::SL, num_suffix(2, 2), ell);
  if (token.rfind("sp", 0) == 0) {
    int n = num_suffix(2, 4);
    if (n % 2 != 0) throw std::invalid_argument("Sp needs even matrix size, got " + token);
    return GroupSpec::make(GroupFamily::Sp, n / 2, ell);
  }
  if (token.rfind("gm", 0) == 0) {
    std::size_t at = token.rfind('^') != std::string::npos ? token.rfind('^') + 1 : 2;
    return GroupSpec::make(GroupFamily::Torus, num_suffix(at, 1), ell);
  }
  throw std::invalid_argument("unknown group family: " + token);
}

// The standard unipotent pair generating SL_2(F_ell).
inline std::vector<Mat<Fp>> sl2_generators(std::uint64_t ell) {
  PrimeField f(ell);
  Mat<Fp> u = Mat<Fp>::identity_like(2, f.one());
  Mat<Fp> l = u;
  u.at(0, 1) = f.one();
  l.at(1, 0) = f.one();
  return {u, l};
}

}  // namespace pi0
