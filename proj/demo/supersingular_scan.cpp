// Compare the detector's vanishing density on a CM curve (y^2 = x^3 - x,
// where half the good primes are supersingular) against a generic curve
// (y^2 = x^3 - x + 1) where vanishing should be rare.

#include <iostream>

#include "pi0/pi0.hpp"

int main() {
  const std::uint64_t cutoff = 20'000;
  pi0::TensorSpec spec = pi0::tensor_spec_preset("cartan2");

  for (pi0::CurveSpec curve : {pi0::CurveSpec{-1, 0, "cm"}, pi0::CurveSpec{-1, 1, "generic"}}) {
    auto records = pi0::frobenius_stream(curve, cutoff);
    auto rep = pi0::density_test(records, spec, cutoff);
    std::cout << curve.label << ": " << rep.zeros << "/" << rep.tested
              << " detector zeros, density ~ "
              << rep.estimate.get_d() << "\n";
  }
  return 0;
}
