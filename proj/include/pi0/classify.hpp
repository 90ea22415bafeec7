#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pi0/charpoint.hpp"
#include "pi0/prime_field.hpp"

namespace pi0 {

// Subgroup classes of GL_2(F_ell) distinguishable from charpoly statistics,
// with their component counts.
enum class EnvelopeClass {
  FullGL2,                   // pi0 = 1
  SplitCartanNormalizer,     // pi0 = 2
  NonsplitCartanNormalizer,  // pi0 = 2
  BorelReducible,            // pi0 = 1
  ExceptionalSmall,          // undecided / small-image pathologies
};

inline std::string to_string(EnvelopeClass c) {
  switch (c) {
    case EnvelopeClass::FullGL2:
      return "full GL2";
    case EnvelopeClass::SplitCartanNormalizer:
      return "split Cartan normalizer";
    case EnvelopeClass::NonsplitCartanNormalizer:
      return "nonsplit Cartan normalizer";
    case EnvelopeClass::BorelReducible:
      return "Borel/reducible";
    case EnvelopeClass::ExceptionalSmall:
      return "exceptional/undecided";
  }
  return "?";
}

struct ClassifyReport {
  EnvelopeClass cls = EnvelopeClass::ExceptionalSmall;
  std::uint64_t ell = 0;
  std::size_t records = 0;
  std::optional<int> pi0;  // empty = n/a
  double trace_zero_fraction = 0.0;
  // Discriminant alpha_1^2 - 4 alpha_2 statistics among trace != 0 records:
  double disc_qr_fraction = 0.0;
  double disc_qnr_fraction = 0.0;
  double disc_zero_fraction = 0.0;
  double trace_zero_threshold = 0.0;
  std::string note;
};

// Classifies the mod-ell image of a GL_2 system from its charpoint stream.
//
// Signals: a Cartan normalizer has trace-zero density ell/(2(ell-1)) >= 1/2
// on the nose (the whole nontrivial component is trace-free), so the gate is
// one-sided at 1/2 - 5/sqrt(N); the identity component then has exclusively
// square discriminants (split: (a-d)^2) or exclusively non-square ones
// (nonsplit: 4*eps*y^2), which separates the two.  Full GL_2 shows
// trace-zero density ~1/ell and both discriminant classes in bulk; a Borel
// keeps discriminants square without the trace-zero excess.
inline ClassifyReport classify_gl2_image(const std::vector<CharPoint<Fp>>& records,
                                         std::uint64_t ell) {
  ensure_prime(ell, "classification characteristic");
  if (records.empty()) throw std::invalid_argument("classify_gl2_image: empty record stream");

  std::size_t trace_zero = 0, qr = 0, qnr = 0, disc_zero = 0;
  for (const auto& r : records) {
    if (r.n() != 2) throw std::invalid_argument("classify_gl2_image: records must be 2-dimensional");
    Fp a1 = r.alpha[0].bind(ell), a2 = r.alpha[1].bind(ell);
    if (a1.mod != ell || a2.mod != ell)
      throw std::invalid_argument("classify_gl2_image: record has wrong modulus");
    if (is_zero(a1)) {
      ++trace_zero;
      continue;
    }
    Fp disc = a1 * a1 - Fp(ell, 4) * a2;
    if (ell == 2) {
      if (is_zero(disc)) ++disc_zero;
      else ++qr;
      continue;
    }
    switch (legendre_symbol(disc.val, ell)) {
      case 1:
        ++qr;
        break;
      case -1:
        ++qnr;
        break;
      default:
        ++disc_zero;
        break;
    }
  }

  const double n = static_cast<double>(records.size());
  const std::size_t nonzero = records.size() - trace_zero;
  ClassifyReport rep;
  rep.ell = ell;
  rep.records = records.size();
  rep.trace_zero_fraction = static_cast<double>(trace_zero) / n;
  rep.trace_zero_threshold = 0.5 - 5.0 / std::sqrt(n);
  if (nonzero > 0) {
    rep.disc_qr_fraction = static_cast<double>(qr) / static_cast<double>(nonzero);
    rep.disc_qnr_fraction = static_cast<double>(qnr) / static_cast<double>(nonzero);
    rep.disc_zero_fraction = static_cast<double>(disc_zero) / static_cast<double>(nonzero);
  }

  if (ell < 5) {
    rep.cls = EnvelopeClass::ExceptionalSmall;
    rep.note = "ell < 5: small-image pathologies, undecided";
    return rep;
  }

  constexpr double kPurityLeak = 0.1;   // tolerated contamination of a pure disc class
  constexpr double kBulkFloor = 0.15;   // both disc classes must appear in bulk for full GL_2
  if (rep.trace_zero_fraction >= rep.trace_zero_threshold) {
    if (nonzero == 0) {
      rep.cls = EnvelopeClass::ExceptionalSmall;
      rep.note = "all traces vanish; no identity-component statistics";
    } else if (rep.disc_qnr_fraction <= kPurityLeak) {
      rep.cls = EnvelopeClass::SplitCartanNormalizer;
      rep.pi0 = 2;
    } else if (rep.disc_qr_fraction <= kPurityLeak) {
      rep.cls = EnvelopeClass::NonsplitCartanNormalizer;
      rep.pi0 = 2;
    } else {
      rep.cls = EnvelopeClass::ExceptionalSmall;
      rep.note = "trace-zero excess without a pure discriminant class";
    }
  } else {
    if (rep.disc_qr_fraction >= kBulkFloor && rep.disc_qnr_fraction >= kBulkFloor) {
      rep.cls = EnvelopeClass::FullGL2;
      rep.pi0 = 1;
    } else if (rep.disc_qnr_fraction <= kPurityLeak && nonzero > 0) {
      rep.cls = EnvelopeClass::BorelReducible;
      rep.pi0 = 1;
    } else {
      rep.cls = EnvelopeClass::ExceptionalSmall;
      rep.note = "statistics match no supported class";
    }
  }
  return rep;
}

}  // namespace pi0
