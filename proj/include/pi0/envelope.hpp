#pragma once

#include <cstdint>
#include <cstring>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "pi0/groups.hpp"

namespace pi0 {

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string pack_mat(const Mat<Fp>& m) {
  std::string key(m.entries().size() * sizeof(std::uint32_t), '\0');
  char* out = key.data();
  for (const Fp& e : m.entries()) {
    std::uint32_t v = static_cast<std::uint32_t>(e.val);
    std::memcpy(out, &v, sizeof v);
    out += sizeof v;
  }
  return key;
}

inline bool is_zero_mat(const Mat<Fp>& m) {
  for (const Fp& e : m.entries())
    if (!is_zero(e)) return false;
  return true;
}

// (x - 1)^n = 0; for ell > n this is equivalent to x^ell = 1.
inline bool is_unipotent(const Mat<Fp>& x, const Mat<Fp>& id) {
  Mat<Fp> nil = x - id;
  Mat<Fp> p = nil;
  for (int k = 1; k < x.size(); ++k) {
    if (is_zero_mat(p)) return true;
    p = p * nil;
  }
  return is_zero_mat(p);
}

}  // namespace detail

// Finitely generated subgroup of GL_n(F_ell) with a lazily materialized,
// budget-bounded element enumeration (breadth-first over the right Cayley
// graph, so the order is deterministic).
class FiniteSubgroup {
 public:
  FiniteSubgroup(std::uint64_t ell, int n, std::vector<Mat<Fp>> generators)
      : ell_(ell), n_(n), gens_(std::move(generators)) {
    ensure_prime(ell, "subgroup characteristic");
    if (n < 1) throw std::invalid_argument("FiniteSubgroup: n must be >= 1");
    for (auto& g : gens_) {
      if (g.size() != n) throw std::invalid_argument("FiniteSubgroup: generator size mismatch");
      Mat<Fp> bound(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Fp& e = g.at(i, j);
          if (e.bound() && e.mod != ell)
            throw std::invalid_argument("FiniteSubgroup: generator entry has wrong modulus");
          bound.at(i, j) = Fp(ell, e.val);
        }
      g = bound;
      if (is_zero(detail::det_fp(g)))
        throw std::invalid_argument("FiniteSubgroup: generator is singular");
    }
  }

  std::uint64_t ell() const { return ell_; }
  int n() const { return n_; }
  const std::vector<Mat<Fp>>& generators() const { return gens_; }
  Mat<Fp> identity() const { return Mat<Fp>::identity_like(n_, Fp(ell_, 1)); }

  // Full element list, or nullptr when the closure exceeds `budget`.
  // Materialized once and cached; a later call with a larger budget retries.
  const std::vector<Mat<Fp>>* elements(std::uint64_t budget) const {
    if (elems_) return &*elems_;
    if (failed_budget_ >= budget) return nullptr;
    std::vector<Mat<Fp>> order;
    std::unordered_set<std::string> seen;
    order.push_back(identity());
    seen.insert(detail::pack_mat(order[0]));
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (const auto& g : gens_) {
        Mat<Fp> next = order[i] * g;
        if (seen.insert(detail::pack_mat(next)).second) {
          if (order.size() >= budget) {
            failed_budget_ = budget;
            return nullptr;
          }
          order.push_back(std::move(next));
        }
      }
    }
    elems_ = std::move(order);
    return &*elems_;
  }

 private:
  std::uint64_t ell_;
  int n_;
  std::vector<Mat<Fp>> gens_;
  mutable std::optional<std::vector<Mat<Fp>>> elems_;
  mutable std::uint64_t failed_budget_ = 0;
};

inline constexpr std::uint64_t kDefaultEnumBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultSeed = 12345;
inline constexpr int kMaxWordLength = 40;

// Nontrivial x with x^ell = 1 (equivalently unipotent, since ell > n).
// Exhaustive when the group fits the budget, otherwise deterministic random
// words; deduplicated in discovery order.
inline std::vector<Mat<Fp>> find_ell_elements(const FiniteSubgroup& G,
                                              std::uint64_t budget = kDefaultEnumBudget,
                                              std::uint64_t seed = kDefaultSeed) {
  if (G.ell() <= static_cast<std::uint64_t>(G.n()))
    throw dimension_error("find_ell_elements: need ell > n, got ell = " + std::to_string(G.ell()) +
                          ", n = " + std::to_string(G.n()));
  const Mat<Fp> id = G.identity();
  std::vector<Mat<Fp>> out;
  if (const auto* els = G.elements(budget)) {
    for (const auto& x : *els)
      if (!(x == id) && detail::is_unipotent(x, id)) out.push_back(x);
    return out;
  }
  if (G.generators().empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(1, kMaxWordLength);
  std::uniform_int_distribution<std::size_t> pick(0, G.generators().size() - 1);
  std::unordered_set<std::string> found;
  for (std::uint64_t it = 0; it < budget; ++it) {
    Mat<Fp> w = id;
    const int len = len_dist(rng);
    for (int j = 0; j < len; ++j) w = w * G.generators()[pick(rng)];
    if (!(w == id) && detail::is_unipotent(w, id) && found.insert(detail::pack_mat(w)).second)
      out.push_back(w);
  }
  return out;
}

// Truncated log of a unipotent matrix: sum_{k=1}^{n-1} (-1)^(k+1) (x-1)^k / k.
// Denominators stay below ell because ell > n.
inline Mat<Fp> nilpotent_log(const Mat<Fp>& x) {
  const int n = x.size();
  std::uint64_t ell = 0;
  for (const Fp& e : x.entries())
    if (e.bound()) ell = e.mod;
  if (!ell) throw std::invalid_argument("nilpotent_log: matrix has no bound entries");
  if (ell <= static_cast<std::uint64_t>(n))
    throw dimension_error("nilpotent_log: need ell > n");
  const Mat<Fp> id = Mat<Fp>::identity_like(n, Fp(ell, 1));
  const Mat<Fp> nil = x - id;
  if (!detail::is_unipotent(x, id))
    throw std::domain_error("nilpotent_log: matrix is not unipotent");
  Mat<Fp> acc(n);
  Mat<Fp> pw = nil;
  for (int k = 1; k < n; ++k) {
    Fp coef = Fp(ell, k).inverse();
    if (k % 2 == 0) coef = -coef;
    Mat<Fp> term = pw;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) term.at(i, j) = term.at(i, j) * coef;
    acc = acc + term;
    if (k + 1 < n) pw = pw * nil;
  }
  return acc;
}

// exp(t N) truncated at the nilpotency bound; inverts nilpotent_log at t = 1
// and is a one-parameter homomorphism in t.
inline Mat<Fp> exp_t(const Mat<Fp>& nilp, const Fp& t) {
  const int n = nilp.size();
  std::uint64_t ell = t.bound() ? t.mod : 0;
  for (const Fp& e : nilp.entries())
    if (e.bound()) ell = e.mod;
  if (!ell) throw std::invalid_argument("exp_t: no bound entries");
  if (ell <= static_cast<std::uint64_t>(n)) throw dimension_error("exp_t: need ell > n");
  Mat<Fp> pw = mat_pow(nilp, static_cast<unsigned long>(n), Fp(ell, 1));
  if (!detail::is_zero_mat(pw)) throw std::domain_error("exp_t: matrix is not nilpotent");
  Mat<Fp> acc = Mat<Fp>::identity_like(n, Fp(ell, 1));
  Mat<Fp> term = acc;
  for (int k = 1; k < n; ++k) {
    term = term * nilp;
    Fp coef = t.bind(ell) * Fp(ell, k).inverse();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) term.at(i, j) = term.at(i, j) * coef;
    acc = acc + term;
  }
  return acc;
}

namespace detail {

// Row-reduction workspace over F_ell for spans of flattened matrices.
class FpSpan {
 public:
  FpSpan(std::uint64_t ell, std::size_t width) : ell_(ell), width_(width) {}

  // Returns true when v was independent of the current span.
  bool insert(std::vector<std::int64_t> v) {
    const auto q = static_cast<std::int64_t>(ell_);
    for (const auto& row : rows_) {
      std::size_t p = pivot_of(row);
      if (v[p] != 0) {
        std::int64_t f = v[p];
        for (std::size_t i = 0; i < width_; ++i) v[i] = ((v[i] - f * row[i]) % q + q) % q;
      }
    }
    std::size_t p = width_;
    for (std::size_t i = 0; i < width_; ++i)
      if (v[i] != 0) {
        p = i;
        break;
      }
    if (p == width_) return false;
    std::int64_t inv = Fp(ell_, v[p]).inverse().val;
    for (std::size_t i = 0; i < width_; ++i) v[i] = (v[i] * inv) % q;
    rows_.push_back(std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::size_t pivot_of(const std::vector<std::int64_t>& row) const {
    for (std::size_t i = 0; i < width_; ++i)
      if (row[i] != 0) return i;
    return width_;
  }
  std::uint64_t ell_;
  std::size_t width_;
  std::vector<std::vector<std::int64_t>> rows_;
};

inline std::vector<std::int64_t> flatten(const Mat<Fp>& m, std::uint64_t ell) {
  std::vector<std::int64_t> v;
  v.reserve(m.entries().size());
  for (const Fp& e : m.entries()) v.push_back(e.bind(ell).val);
  return v;
}

}  // namespace detail

struct NoriReport {
  std::uint64_t ell = 0;
  int n = 0;
  std::size_t ell_element_count = 0;
  int lie_dimension = 0;
  bool enumeration_complete = false;
  bool sampled = false;
  std::optional<BigInt> group_order;          // |Gamma| when enumerated
  std::optional<BigInt> plus_subgroup_order;  // |Gamma+| when enumerated
  std::optional<GroupSpec> envelope_guess;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
};

// Dimension of the smallest subspace of n x n matrices containing the logs
// of all found order-ell elements and stable under conjugation by the
// generators — the Lie algebra of the envelope's unipotent part at desk
// scale.  |Gamma+| (subgroup generated by the ell-elements) is reported only
// when full enumeration succeeded.
inline NoriReport nori_lie_dimension(const FiniteSubgroup& G,
                                     std::uint64_t budget = kDefaultEnumBudget,
                                     std::uint64_t seed = kDefaultSeed) {
  if (G.ell() <= static_cast<std::uint64_t>(G.n()))
    throw dimension_error("nori_lie_dimension: need ell > n, got ell = " +
                          std::to_string(G.ell()) + ", n = " + std::to_string(G.n()));
  NoriReport rep;
  rep.ell = G.ell();
  rep.n = G.n();
  rep.budget = budget;
  rep.seed = seed;

  const auto* els = G.elements(budget);
  rep.enumeration_complete = els != nullptr;
  rep.sampled = !rep.enumeration_complete;
  if (els) rep.group_order = BigInt(static_cast<unsigned long>(els->size()));

  std::vector<Mat<Fp>> ell_elements = find_ell_elements(G, budget, seed);
  rep.ell_element_count = ell_elements.size();

  // Ad-stable span of the logs.
  std::vector<Mat<Fp>> ginv;
  for (const auto& g : G.generators()) ginv.push_back(inverse(g));
  detail::FpSpan span(G.ell(), static_cast<std::size_t>(G.n()) * static_cast<std::size_t>(G.n()));
  std::vector<Mat<Fp>> work;
  for (const auto& x : ell_elements) work.push_back(nilpotent_log(x));
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!span.insert(detail::flatten(work[i], G.ell()))) continue;
    for (std::size_t k = 0; k < G.generators().size(); ++k)
      work.push_back(G.generators()[k] * work[i] * ginv[k]);
  }
  rep.lie_dimension = span.rank();

  if (els) {
    if (ell_elements.empty()) {
      rep.plus_subgroup_order = BigInt(1);
    } else {
      FiniteSubgroup plus(G.ell(), G.n(), ell_elements);
      const auto* pels = plus.elements(budget);
      if (pels) rep.plus_subgroup_order = BigInt(static_cast<unsigned long>(pels->size()));
    }
  }

  if (rep.lie_dimension == G.n() * G.n() - 1 && G.ell() > 2)
    rep.envelope_guess = GroupSpec::make(GroupFamily::SL, G.n(), G.ell());
  return rep;
}

}  // namespace pi0
