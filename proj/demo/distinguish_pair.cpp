// Two graphs with identical singular values that every singular-value norm
// confuses, told apart by an eigenvalue-based CHS norm.

#include <iostream>

#include "chs/chs.hpp"

int main() {
  using namespace chs;
  Graph f = family(FamilyId::complete(3));
  auto [g, h] = make_cospectral_pair(f);

  std::cout << "F = K3, G = F+F (" << emit_graph6(g) << "), H = FxK2 (" << emit_graph6(h)
            << ")\n";
  std::cout << "energy(G) = " << energy(g) << ", energy(H) = " << energy(h) << '\n';

  if (auto d = distinguish(g, h)) {
    std::cout << "distinguished at d = " << *d << ": ||G||_d^d = "
              << to_fraction_string(chs_dth_power_exact(g, *d)) << ", ||H||_d^d = "
              << to_fraction_string(chs_dth_power_exact(h, *d)) << '\n';
  }
  return 0;
}
