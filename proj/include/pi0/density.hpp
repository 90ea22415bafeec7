#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pi0/frobenius.hpp"
#include "pi0/tensor.hpp"

namespace pi0 {

// Finite-sample density of {records with detector value 0}.  The estimate is
// an exact rational; the cutoff is carried so that no asymptotic claim is
// implied by the report.
struct DensityReport {
  std::uint64_t cutoff = 0;
  std::size_t tested = 0;
  std::size_t zeros = 0;
  std::size_t skipped = 0;  // mod-ell runs: records with p == ell
  BigRat estimate;
  std::optional<BigRat> expected;
  std::optional<std::uint64_t> mod_ell;
  TensorSpec spec;
};

// expected, when given, is (k, component count) -> k/|pi0|.
inline DensityReport density_test(const std::vector<FrobeniusRecord>& records,
                                  const TensorSpec& spec, std::uint64_t cutoff,
                                  std::optional<std::pair<long, long>> expected = std::nullopt,
                                  std::optional<std::uint64_t> mod_ell = std::nullopt) {
  spec.validate();
  if (records.empty()) throw std::invalid_argument("density_test: empty record stream");
  DensityReport rep;
  rep.cutoff = cutoff;
  rep.spec = spec;
  rep.mod_ell = mod_ell;
  if (mod_ell) ensure_prime(*mod_ell);
  for (const auto& r : records) {
    if (mod_ell) {
      if (r.p % *mod_ell == 0) {  // ell divides the clearing factor p^k
        ++rep.skipped;
        continue;
      }
      CharPoint<Fp> alpha = reduce_record(r, *mod_ell);
      ++rep.tested;
      if (is_zero(serre_f_eval(alpha, spec))) ++rep.zeros;
    } else {
      ++rep.tested;
      if (is_zero(serre_f_eval(r.charpoly(), spec))) ++rep.zeros;
    }
  }
  if (rep.tested == 0) throw std::invalid_argument("density_test: every record was skipped");
  rep.estimate = make_rat(BigInt(static_cast<unsigned long>(rep.zeros)),
                          BigInt(static_cast<unsigned long>(rep.tested)));
  if (expected) rep.expected = make_rat(BigInt(expected->first), BigInt(expected->second));
  return rep;
}

}  // namespace pi0
