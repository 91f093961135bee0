// Exact classical bounds for every catalog functional, compared with the stored values.
#include <iostream>

#include "ticontext/classical.hpp"

using namespace ticontext;

int main() {
  int mismatches = 0;
  for (const auto& f : catalog()) {
    const Rational L = classical_bound(f);
    const bool ok = !f.classical_bound || *f.classical_bound == L;
    if (!ok) ++mismatches;
    std::cout << f.id << "  L = " << to_string(L) << (ok ? "" : "  (catalog disagrees)") << '\n';
  }
  std::cout << catalog().size() << " functionals, " << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}
