#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "pi0/matrix.hpp"

namespace pi0 {

// Multiset of characters of a split rank-r torus (integer vectors in Z^r),
// stored sorted so equality is multiset equality.
struct WeightMultiset {
  int rank = 0;
  std::vector<std::vector<long long>> weights;

  std::size_t size() const { return weights.size(); }

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b) {
    return a.rank == b.rank && a.weights == b.weights;
  }
};

// The multiset of diagonal torus characters: one exponent vector per diagonal
// slot of the n-dimensional representation.
inline WeightMultiset weight_multiset(std::vector<std::vector<long long>> exponents) {
  if (exponents.empty()) throw std::invalid_argument("weight_multiset: empty weight list");
  const std::size_t r = exponents[0].size();
  if (r == 0) throw std::invalid_argument("weight_multiset: rank must be >= 1");
  for (const auto& w : exponents)
    if (w.size() != r) throw std::invalid_argument("weight_multiset: mixed vector lengths");
  std::sort(exponents.begin(), exponents.end());
  return WeightMultiset{static_cast<int>(r), std::move(exponents)};
}

// {lambda - mu : (lambda, mu) in Sigma^2}, all n^2 ordered pairs with
// multiplicity.
inline WeightMultiset difference_multiset(const WeightMultiset& sigma) {
  std::vector<std::vector<long long>> diffs;
  diffs.reserve(sigma.size() * sigma.size());
  for (const auto& l : sigma.weights)
    for (const auto& m : sigma.weights) {
      std::vector<long long> d(l.size());
      for (std::size_t i = 0; i < l.size(); ++i) d[i] = l[i] - m[i];
      diffs.push_back(std::move(d));
    }
  std::sort(diffs.begin(), diffs.end());
  return WeightMultiset{sigma.rank, std::move(diffs)};
}

// Support-superset test: every root vector occurs in the multiset.
inline bool contains_roots(const WeightMultiset& diffs,
                           const std::vector<std::vector<long long>>& roots) {
  std::set<std::vector<long long>> support(diffs.weights.begin(), diffs.weights.end());
  for (const auto& r : roots) {
    if (r.size() != static_cast<std::size_t>(diffs.rank))
      throw std::invalid_argument("contains_roots: root has wrong rank");
    if (!support.count(r)) return false;
  }
  return true;
}

// Per-block determinants of a block-diagonal matrix; the map
// (A_1,...,A_s) -> (det A_1,...,det A_s).  Rejects matrices with support
// outside the declared blocks.
template <class T>
std::vector<T> det_coordinates(const std::vector<int>& blocks, const Mat<T>& m) {
  int total = 0;
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("det_coordinates: block sizes must be >= 1");
    total += b;
  }
  if (total != m.size())
    throw std::invalid_argument("det_coordinates: block sizes do not sum to the matrix size");
  // off-block support check
  int row0 = 0;
  for (int b : blocks) {
    for (int i = row0; i < row0 + b; ++i)
      for (int j = 0; j < m.size(); ++j)
        if ((j < row0 || j >= row0 + b) && !is_zero(m.at(i, j)))
          throw std::invalid_argument("det_coordinates: matrix is not block-diagonal as declared");
    row0 += b;
  }
  std::vector<T> dets;
  dets.reserve(blocks.size());
  row0 = 0;
  for (int b : blocks) {
    Mat<T> blk(b);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) blk.at(i, j) = m.at(row0 + i, row0 + j);
    dets.push_back(det(blk));
    row0 += b;
  }
  return dets;
}

}  // namespace pi0
