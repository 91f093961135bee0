// Variational descent on 322/1 with three-level observables, then the LTI-NPA(5,1)
// certificate from below. The two values should meet near -6.3275.
#include <iomanip>
#include <iostream>

#include "ticontext/classical.hpp"
#include "ticontext/optimizer.hpp"
#include "ticontext/relax_sdp.hpp"

using namespace ticontext;

int main(int argc, char** argv) {
  const int seeds = argc > 1 ? std::stoi(argv[1]) : 4;
  const auto& f = catalog_entry("322/1");
  const Ansatz a = structured_ansatz(f.scenario, 3);
  DescentOptions o;
  o.bond = 5;
  const auto& best = best_of(multi_start(f, a, seeds, 1, o));
  const double npa = solve_sdp(build_ltinpa(f, 5)).certified;

  std::cout << std::setprecision(8);
  std::cout << "classical bound   " << to_string(classical_bound(f)) << '\n';
  std::cout << "variational (d=3) " << best.e << "  ansatz " << a.label << "  seed " << best.seed << '\n';
  std::cout << "LTI-NPA(5,1)      " << npa << '\n';
  std::cout << "gap               " << best.e - npa << '\n';
  return best.e < to_double(classical_bound(f)) ? 0 : 1;
}
