// Prints exact CHS d-th powers for paths, the one family with no known
// closed form: ||P_n||_2 = sqrt(n-1), everything above is computed.

#include <iostream>

#include "chs/chs.hpp"

int main() {
  using namespace chs;
  std::cout << "exact ||P_n||_d^d\n n:";
  for (int d = 2; d <= 10; d += 2) std::cout << "\td=" << d;
  std::cout << '\n';
  for (int n = 2; n <= 10; ++n) {
    Graph p = family(FamilyId::path(n));
    auto counts = closed_walk_counts(p, 10);
    std::cout << ' ' << n << ':';
    for (int d = 2; d <= 10; d += 2)
      std::cout << '\t' << to_fraction_string(chs_dth_power_exact(counts, d));
    std::cout << '\n';
  }
  return 0;
}
