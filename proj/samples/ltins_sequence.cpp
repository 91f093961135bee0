// Exact LTI-NS values for the 222 functional against -2 - 4/(n^2 - 3n + 6).
#include <iostream>

#include "ticontext/relax_lp.hpp"

using namespace ticontext;

int main(int argc, char** argv) {
  const int n_max = argc > 1 ? std::stoi(argv[1]) : 5;
  const auto& f = catalog_entry("222/1");
  std::map<int, Rational> values;
  for (int n = 3; n <= n_max; ++n) values[n] = ltins_value(f, n);
  bool all = true;
  for (const auto& r : fitted_sequence_check(values)) {
    std::cout << "n=" << r.n << "  " << to_string(r.value) << "  fit " << to_string(r.fit) << "  residual " << to_string(r.residual) << '\n';
    all = all && r.exact;
  }
  return all ? 0 : 1;
}
