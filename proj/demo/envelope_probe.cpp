// Probe the unipotent envelope of SL_2(F_7): the span of logarithms of the
// order-7 elements should fill the full 3-dimensional trace-zero algebra,
// and the subgroup they generate should be all of SL_2(F_7).

#include <iostream>

#include "pi0/pi0.hpp"

int main() {
  const std::uint64_t ell = 7;
  pi0::FiniteSubgroup G(ell, 2, pi0::sl2_generators(ell));
  pi0::NoriReport rep = pi0::nori_lie_dimension(G);

  std::cout << "SL_2(F_" << ell << "): " << rep.ell_element_count
            << " elements of order " << ell << ", envelope Lie dimension "
            << rep.lie_dimension << "\n";
  if (rep.group_order && rep.plus_subgroup_order)
    std::cout << "group order " << *rep.group_order << ", unipotently generated subgroup order "
              << *rep.plus_subgroup_order << "\n";
  if (rep.envelope_guess) std::cout << "envelope: " << rep.envelope_guess->name() << "\n";
  return 0;
}
