#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pi0/charpoint.hpp"
#include "pi0/groups.hpp"
#include "pi0/tensor.hpp"

namespace pi0 {

// Per-(group, ell) exact counting results; optional sections are filled by
// whichever operation produced the report.
struct CountReport {
  std::string family;
  std::uint64_t ell = 0;
  BigInt group_order;
  int dimension = 0;

  // order bounds (ell-1)^d <= |A| <= (ell+1)^d
  std::optional<bool> gpbound_pass;
  std::optional<BigRat> lower_margin;  // |A| / (ell-1)^d
  std::optional<BigRat> upper_margin;  // |A| / (ell+1)^d

  // detector slice Z = {g in A : f(chi(g)) = 0}
  std::optional<BigInt> slice_count;
  std::optional<BigRat> slice_ratio;   // |Z| / |A|
  std::optional<BigRat> slice_scaled;  // |Z| / ell^(d-1)
};

// (ell-1)^d <= |A(F_ell)| <= (ell+1)^d for connected groups, d = dimension;
// exact integer arithmetic, margins reported as rationals.
inline CountReport verify_gpbound(const GroupSpec& g) {
  if (!g.connected())
    throw std::invalid_argument("verify_gpbound: " + g.name() +
                                " is not connected; order bounds do not apply");
  CountReport rep;
  rep.family = g.name();
  rep.ell = g.ell;
  rep.group_order = g.order();
  rep.dimension = g.dimension();
  const BigInt q(static_cast<unsigned long>(g.ell));
  const BigInt lo = ring_pow(BigInt(q - 1), static_cast<unsigned long>(rep.dimension));
  const BigInt hi = ring_pow(BigInt(q + 1), static_cast<unsigned long>(rep.dimension));
  rep.gpbound_pass = (lo <= rep.group_order) && (rep.group_order <= hi);
  rep.lower_margin = make_rat(rep.group_order, lo);
  rep.upper_margin = make_rat(rep.group_order, hi);
  return rep;
}

inline std::vector<CountReport> verify_gpbound(const GroupSpec& g,
                                               const std::vector<std::uint64_t>& ells) {
  std::vector<CountReport> out;
  out.reserve(ells.size());
  for (std::uint64_t ell : ells) out.push_back(verify_gpbound(GroupSpec::make(g.family, g.param, ell)));
  return out;
}

namespace detail {

// Detector zero-test memoized on the charpoint; the detector value depends
// only on chi(g), and distinct charpoints over F_ell are few.
class SliceTester {
 public:
  SliceTester(const TensorSpec& spec, std::uint64_t ell) : spec_(spec), ell_(ell) {}

  bool is_zero_at(const Mat<Fp>& g) {
    key_.clear();
    const int n = g.size();
    if (n == 2) {
      Fp tr = g.at(0, 0) + g.at(1, 1);
      Fp dt = det2(g);
      key_.push_back((-tr).bind(ell_).val);
      key_.push_back(dt.bind(ell_).val);
    } else {
      Poly<Fp> cp = charpoly(g);
      for (int i = 0; i < n; ++i) key_.push_back(cp.coeff(i).bind(ell_).val);
    }
    auto it = cache_.find(key_);
    if (it != cache_.end()) return it->second;
    bool z = is_zero(serre_f_eval(charpoly_from_key(key_), spec_));
    cache_.emplace(key_, z);
    return z;
  }

 private:
  Poly<Fp> charpoly_from_key(const std::vector<std::int64_t>& key) const {
    // n == 2 keys hold (alpha_1, alpha_2); longer keys hold ascending coeffs.
    std::vector<Fp> c(key.size() + 1);
    if (key.size() == 2) {
      c[0] = Fp(ell_, key[1]);
      c[1] = Fp(ell_, key[0]);
    } else {
      for (std::size_t i = 0; i < key.size(); ++i) c[i] = Fp(ell_, key[i]);
    }
    c.back() = Fp(ell_, 1);
    return Poly<Fp>(std::move(c));
  }

  TensorSpec spec_;
  std::uint64_t ell_;
  std::vector<std::int64_t> key_;
  std::map<std::vector<std::int64_t>, bool> cache_;
};

}  // namespace detail

// Exact |Z| = #{g in G(F_ell) : f(chi(g)) = 0 mod ell} by exhaustive
// enumeration.
inline CountReport count_slice(const GroupSpec& g, const TensorSpec& spec,
                               std::uint64_t budget = 5'000'000) {
  spec.validate();
  CountReport rep;
  rep.family = g.name();
  rep.ell = g.ell;
  rep.group_order = g.order();
  rep.dimension = g.dimension();
  detail::SliceTester tester(spec, g.ell);
  BigInt zeros(0), seen(0);
  g.for_each(
      [&](const Mat<Fp>& m) {
        ++seen;
        if (tester.is_zero_at(m)) ++zeros;
      },
      budget);
  if (seen != rep.group_order)
    throw std::logic_error("count_slice: enumeration of " + g.name() + " visited " +
                           to_string(seen) + " elements, expected " + to_string(rep.group_order));
  rep.slice_count = zeros;
  rep.slice_ratio = make_rat(zeros, rep.group_order);
  rep.slice_scaled = make_rat(zeros, ring_pow(BigInt(static_cast<unsigned long>(g.ell)),
                                              static_cast<unsigned long>(rep.dimension - 1)));
  return rep;
}

// Slice counts across an ell range with the two fitted trends the
// contradiction argument needs: for connected groups |Z|/|G| should decay
// like 1/ell (max of ratio*ell reported); for the non-connected Cartan
// normalizers it stays bounded below (min ratio reported).
struct ScalingStudy {
  std::vector<CountReport> rows;
  std::optional<BigRat> max_ratio_times_ell;
  std::optional<BigRat> min_ratio;
};

inline ScalingStudy scaling_study(const GroupSpec& g, const TensorSpec& spec,
                                  const std::vector<std::uint64_t>& ells,
                                  std::uint64_t budget = 5'000'000) {
  ScalingStudy st;
  for (std::uint64_t ell : ells) {
    CountReport rep = count_slice(GroupSpec::make(g.family, g.param, ell), spec, budget);
    BigRat ratio = *rep.slice_ratio;
    BigRat scaled = ratio * BigRat(static_cast<unsigned long>(ell));
    if (!st.max_ratio_times_ell || scaled > *st.max_ratio_times_ell)
      st.max_ratio_times_ell = scaled;
    if (!st.min_ratio || ratio < *st.min_ratio) st.min_ratio = ratio;
    st.rows.push_back(std::move(rep));
  }
  return st;
}

}  // namespace pi0
