#include <iostream>

#include <CLI11.hpp>

#include "ticontext/cli.hpp"

using namespace ticontext;
using namespace ticontext::cli;

namespace {

void add_schedule(CLI::App* cmd, OptimizeConfig& c) {
  auto& s = c.schedule;
  auto flag = [&c](CLI::Option* o) { o->each([&c](const std::string&) { c.schedule_given = true; }); };
  flag(cmd->add_option("--gamma0", s.gamma0, "initial step size"));
  flag(cmd->add_option("--alpha", s.alpha, "step decay base"));
  flag(cmd->add_option("--slope", s.slope, "decay exponent slope q(k) = slope*k"));
  flag(cmd->add_option("--gamma-min", s.gamma_min, "step size floor"));
  flag(cmd->add_option("--tol", s.tol, "stopping tolerance"));
  flag(cmd->add_option("--max-iter", s.max_iter, "iteration cap"));
  flag(cmd->add_option("--momentum", s.momentum, "heavy-ball momentum"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ticontext: translation-invariant contextuality witnesses on 1D chains"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);

  std::string selector;
  auto* classical = app.add_subcommand("classical", "exact classical bound of a functional");
  classical->add_option("functional", selector, "catalog id (e.g. 322/1) or functional file")->required();

  OptimizeConfig oc;
  auto* optimize = app.add_subcommand("optimize", "variational uMPS descent");
  optimize->add_option("functional", oc.functional, "catalog id or functional file")->required();
  optimize->add_option("--d", oc.d, "local dimension");
  optimize->add_option("--D", oc.bond, "bond dimension");
  optimize->add_option("--signature", oc.signature, "number of -1 eigenvalues per setting, e.g. 1,2,1");
  optimize->add_option("--ansatz", oc.ansatz, "structured | general");
  optimize->add_option("--variant", oc.variant, "structured class variant");
  optimize->add_flag("--full-basis", oc.full_basis, "full unitary generator basis for the general ansatz");
  optimize->add_option("--seeds", oc.seeds, "number of independent starts");
  optimize->add_option("--seed", oc.seed, "base seed");
  optimize->add_option("--out", oc.out_dir, "output directory");
  optimize->add_flag("--povm", oc.povm, "d=2 POVM descent (232 functionals)");
  add_schedule(optimize, oc);

  auto* bound = app.add_subcommand("bound", "certified lower bounds");
  bound->require_subcommand(1);
  std::string b_sel;
  int b_n = 4, b_s = 1;
  bool b_float = false;
  std::string b_level = "local";
  double b_tol = 1e-8;
  auto* ns = bound->add_subcommand("ns", "LTI-NS linear program");
  ns->add_option("--functional", b_sel, "catalog id or functional file")->required();
  ns->add_option("--n", b_n, "number of sites")->required();
  ns->add_flag("--exact", "exact rational solve (default)");
  ns->add_flag("--float", b_float, "floating-point solve only");
  auto* npa = bound->add_subcommand("npa", "LTI-NPA moment relaxation");
  npa->add_option("--functional", b_sel, "catalog id or functional file")->required();
  npa->add_option("--n", b_n, "number of sites")->required();
  npa->add_option("--s", b_s, "hierarchy level (only 1)");
  npa->add_option("--level", b_level, "local | standard");
  npa->add_option("--tol", b_tol, "relative duality gap target");

  ReproduceConfig rc;
  std::uint64_t r_seed = 0;
  auto* reproduce = app.add_subcommand("reproduce", "recompute a reference table and compare cell by cell");
  reproduce->add_option("table", rc.table, "I | II | III | VI")->required();
  auto* seed_opt = reproduce->add_option("--seed", r_seed, "base seed (mandatory)");
  reproduce->add_option("--n-max", rc.n_max, "largest n for table I");
  reproduce->add_option("--d-max", rc.d_max, "largest d for table II");
  reproduce->add_option("--column", rc.column, "table VI column: Q2 | Q3 | Q4 | NPA");
  reproduce->add_option("--rows", rc.rows, "row subset, e.g. 1,3,7-10");
  reproduce->add_option("--seeds", rc.seeds, "starts per variational cell");
  reproduce->add_option("--D", rc.bond, "bond dimension override");
  reproduce->add_option("--quantum", rc.quantum, "table III quantum column: tabulated | computed");
  reproduce->add_option("--out", rc.out_dir, "directory for table_<name>.csv");

  SurfaceConfig sc;
  auto* surface = app.add_subcommand("surface", "energy density on a two-parameter grid");
  surface->add_option("functional", sc.functional, "catalog id or functional file")->required();
  surface->add_option("--d", sc.d, "local dimension");
  surface->add_option("--signature", sc.signature, "number of -1 eigenvalues per setting");
  surface->add_option("--ansatz", sc.ansatz, "structured | general");
  surface->add_option("--variant", sc.variant, "structured class variant");
  surface->add_option("--w1", sc.w1, "lo:hi:step");
  surface->add_option("--w2", sc.w2, "lo:hi:step");
  surface->add_option("--D", sc.bond, "bond dimension");
  surface->add_option("--out", sc.out, "CSV file (stdout if omitted)");

  PlotConfig pc;
  auto* plot = app.add_subcommand("plotdata", "data series for the convergence and LTI-NS figures");
  plot->add_option("figure", pc.figure, "fig2 | fig3")->required();
  plot->add_option("--functional", pc.functional, "fig2 functional");
  plot->add_option("--d", pc.d, "fig2 local dimension");
  plot->add_option("--signature", pc.signature, "fig2 signature");
  plot->add_option("--ansatz", pc.ansatz, "structured | general");
  plot->add_option("--variant", pc.variant, "structured class variant");
  plot->add_option("--D", pc.bond, "fig2 bond dimension");
  plot->add_option("--seed", pc.seed, "fig2 seed");
  plot->add_option("--n-max", pc.n_max, "fig3 largest n");
  plot->add_option("--exact-max", pc.exact_max, "fig3 largest n solved exactly");
  plot->add_option("--out", pc.out_dir, "output directory");
  plot->add_flag("--svg", pc.svg, "also write an SVG rendering");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*classical) return cmd_classical(selector, std::cout);
    if (*optimize) return cmd_optimize(oc, std::cout);
    if (*ns) return cmd_bound_ns(b_sel, b_n, !b_float, std::cout);
    if (*npa) return cmd_bound_npa(b_sel, b_n, b_s, parse_npa_level(b_level), b_tol, std::cout);
    if (*reproduce) {
      if (*seed_opt) rc.seed = r_seed;
      return cmd_reproduce(rc, std::cout);
    }
    if (*surface) return cmd_surface(sc, std::cout);
    if (*plot) return cmd_plotdata(pc, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
