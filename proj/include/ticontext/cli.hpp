#pragma once

// Commands behind the ticontext executable. Each returns the process exit
// code and writes human-readable output to `out`; files go under the
// configured output directory.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ticontext/classical.hpp"
#include "ticontext/io.hpp"
#include "ticontext/optimizer.hpp"
#include "ticontext/relax_lp.hpp"
#include "ticontext/relax_sdp.hpp"

namespace ticontext::cli {

namespace fs = std::filesystem;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string decimal(const Rational& q, int digits = 10) { return fmt(to_double(q), digits); }

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c) || c == '[' || c == ']'; }), tok.end());
    if (tok.empty()) continue;
    const auto dash = tok.find('-', 1);
    try {
      if (dash != std::string::npos) {
        const int a = std::stoi(tok.substr(0, dash)), b = std::stoi(tok.substr(dash + 1));
        if (b < a) throw UsageError("bad range '" + tok + "'");
        for (int i = a; i <= b; ++i) out.push_back(i);
      } else {
        out.push_back(std::stoi(tok));
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const UsageError*>(&e)) throw;
      throw UsageError("not an integer list: '" + s + "'");
    }
  }
  return out;
}

/// "lo:hi:step"
inline std::vector<double> parse_axis(const std::string& s) {
  std::stringstream ss(s);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c)) throw UsageError("grid axis must be lo:hi:step, got '" + s + "'");
  try {
    return grid_axis(std::stod(a), std::stod(b), std::stod(c));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("grid axis '") + s + "': " + e.what());
  }
}

inline Ansatz make_ansatz(const BellFunctional& f, int d, const std::string& signature, const std::string& kind, int variant,
                          BasisKind basis = BasisKind::real_antisymmetric) {
  if (kind != "structured" && kind != "general") throw UsageError("ansatz must be 'structured' or 'general'");
  if (signature.empty()) {
    if (kind == "general") throw UsageError("--ansatz general needs --signature");
    return structured_ansatz(f.scenario, d, variant);
  }
  Signature sig{d, parse_int_list(signature)};
  if (static_cast<int>(sig.minus_counts.size()) != f.settings())
    throw UsageError("signature " + sig.str() + " has the wrong number of entries for scenario " + to_string(f.scenario));
  sig.validate();
  if (kind == "structured") {
    if (auto a = structured_for_signature(f.scenario, sig)) return *a;
    throw UsageError("no structured class with signature " + sig.str() + " at d=" + std::to_string(d) + "; use --ansatz general");
  }
  return general_ansatz(sig, basis);
}

/// Structured class for a tabulated signature when one exists, the general ansatz otherwise.
inline Ansatz ansatz_for_reference(const BellFunctional& f, const Signature& sig) {
  if (auto a = structured_for_signature(f.scenario, sig)) return *a;
  return general_ansatz(sig);
}

inline void ensure_dir(const std::string& dir) {
  if (!dir.empty()) fs::create_directories(dir);
}

inline std::ofstream open_out(const fs::path& p) {
  std::ofstream os(p);
  if (!os) throw std::runtime_error("cannot write '" + p.string() + "'");
  return os;
}

// ---------------------------------------------------------------------------
// classical

inline int cmd_classical(const std::string& selector, std::ostream& out) {
  const BellFunctional f = resolve_functional(selector);
  const Rational b = classical_bound(f);
  out << to_string(b) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// optimize

struct OptimizeConfig {
  std::string functional;
  int d = 2;
  Eigen::Index bond = 5;
  std::string signature;
  std::string ansatz = "structured";
  int variant = 1;
  bool full_basis = false;
  int seeds = 1;
  std::uint64_t seed = 1;
  std::string out_dir;
  bool povm = false;
  Schedule schedule;
  bool schedule_given = false;
};

inline RunInfo optimize_info(const OptimizeConfig& c, const std::string& ansatz_label) {
  RunInfo info{"optimize", c.functional, {}, c.seed};
  info.set("d", c.d).set("D", c.bond).set("ansatz", ansatz_label).set("seeds", c.seeds).set("povm", c.povm ? "yes" : "no");
  info.set("gamma0", c.schedule.gamma0).set("alpha", c.schedule.alpha).set("slope", c.schedule.slope);
  info.set("gamma_min", c.schedule.gamma_min).set("tol", c.schedule.tol).set("max_iter", c.schedule.max_iter);
  info.set("momentum", c.schedule.momentum);
  return info;
}

inline int cmd_optimize(OptimizeConfig c, std::ostream& out) {
  const BellFunctional f = resolve_functional(c.functional);
  if (c.seeds < 1) throw UsageError("--seeds must be >= 1");
  if (c.povm) {
    if (f.scenario != Scenario::nn3) throw UsageError("--povm applies to 232 functionals");
    if (c.d != 2) throw UsageError("--povm requires --d 2");
    PovmOptions po;
    if (c.schedule_given) po.schedule = c.schedule;
    c.schedule = po.schedule;
    c.bond = po.bond;
    std::vector<PovmResult> runs(static_cast<std::size_t>(c.seeds));
    parallel_for(runs.size(), [&](std::size_t i) { runs[i] = povm_descend(f, c.seed + i, po); });
    const auto best = std::min_element(runs.begin(), runs.end(), [](const auto& a, const auto& b) { return a.e < b.e; });
    const RunInfo info = optimize_info(c, "povm");
    if (!c.out_dir.empty()) {
      ensure_dir(c.out_dir);
      for (const auto& r : runs) {
        auto os = open_out(fs::path(c.out_dir) / ("trace_seed" + std::to_string(r.seed) + ".csv"));
        RunInfo ri = info;
        ri.seed = r.seed;
        write_header(os, ri);
        write_trace_csv(os, r.trace);
      }
      nlohmann::json j{{"version", version()}, {"functional", f.id}, {"config", info.config_line()}, {"seed", best->seed},
                       {"e", best->e}, {"max_imag", best->max_imag}, {"attempts", best->attempts},
                       {"status", to_string(best->trace.status)}, {"observables", nlohmann::json::array()}};
      for (const auto& s : best->sigma) j["observables"].push_back(matrix_json(s));
      open_out(fs::path(c.out_dir) / "result.json") << j.dump(2) << '\n';
    }
    for (const auto& r : runs)
      out << "seed " << r.seed << "  e " << fmt(r.e, 10) << "  attempts " << r.attempts << "  max_imag " << fmt(r.max_imag, 3)
          << "  " << to_string(r.trace.status) << '\n';
    out << "best e " << fmt(best->e, 10) << " (classical bound " << to_string(classical_bound(f)) << ")\n";
    return best->trace.status == RunStatus::converged ? 0 : 1;
  }

  const Ansatz a = make_ansatz(f, c.d, c.signature, c.ansatz, c.variant, c.full_basis ? BasisKind::full : BasisKind::real_antisymmetric);
  DescentOptions o;
  o.bond = c.bond;
  o.schedule = c.schedule;
  const auto runs = multi_start(f, a, c.seeds, c.seed, o);
  const auto& best = best_of(runs);
  const RunInfo info = optimize_info(c, a.label);
  if (!c.out_dir.empty()) {
    ensure_dir(c.out_dir);
    {
      auto os = open_out(fs::path(c.out_dir) / "manifest.txt");
      write_header(os, info, "#");
      os << "functional " << f.id << "\nd " << c.d << "\nsignature " << a.signature().str() << "\nD " << c.bond << "\nseed " << c.seed
         << "\nseeds " << c.seeds << "\n";
    }
    for (const auto& r : runs) {
      auto os = open_out(fs::path(c.out_dir) / ("trace_seed" + std::to_string(r.seed) + ".csv"));
      RunInfo ri = info;
      ri.seed = r.seed;
      write_header(os, ri);
      write_trace_csv(os, r.trace);
    }
    nlohmann::json j{{"version", version()}, {"functional", f.id}, {"config", info.config_line()}, {"seed", best.seed},
                     {"e", best.e}, {"w", best.w}, {"status", to_string(best.trace.status)}, {"observables", nlohmann::json::array()}};
    for (const auto& s : a.observables(best.w)) j["observables"].push_back(matrix_json(s));
    open_out(fs::path(c.out_dir) / "result.json") << j.dump(2) << '\n';
    auto os = open_out(fs::path(c.out_dir) / "umps.txt");
    write_header(os, RunInfo{info.command, info.functional, info.config, best.seed});
    write_checkpoint(os, best.state.umps(), best.state.report.energy);
  }
  for (const auto& r : runs)
    out << "seed " << r.seed << "  e " << fmt(r.e, 10) << "  iterations " << r.trace.rows.size() << "  " << to_string(r.trace.status) << '\n';
  out << "best e " << fmt(best.e, 10) << " at w = [";
  for (std::size_t i = 0; i < best.w.size(); ++i) out << (i ? ", " : "") << fmt(best.w[i], 6);
  out << "] (classical bound " << to_string(classical_bound(f)) << ")\n";
  return best.trace.status == RunStatus::converged ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bounds

inline int cmd_bound_ns(const std::string& selector, int n, bool exact, std::ostream& out) {
  const BellFunctional f = resolve_functional(selector);
  const auto lp = build_ltins(f, n);
  if (exact) {
    const auto r = solve_exact(lp);
    out << to_string(r.value) << "  " << decimal(r.value, 12) << '\n';
  } else {
    out << fmt(solve_float(lp), 12) << '\n';
  }
  return 0;
}

inline int cmd_bound_npa(const std::string& selector, int n, int s, NpaLevel level, double tol, std::ostream& out) {
  const BellFunctional f = resolve_functional(selector);
  const auto sdp = build_ltinpa(f, n, s, level);
  const auto r = solve_sdp(sdp, tol);
  out << "certified " << fmt(r.certified, 10) << "\n";
  out << "primal " << fmt(r.primal, 10) << "  dual " << fmt(r.dual, 10) << "  gap " << fmt(r.gap, 3) << "  status " << to_string(r.status) << '\n';
  out << "matrix " << sdp.size() << "x" << sdp.size() << "  moments " << sdp.variables() << "  level " << to_string(level) << '\n';
  if (r.status != SdpStatus::optimal) out << "warning: duality gap not reached, bound is the best certified value\n";
  return 0;
}

// ---------------------------------------------------------------------------
// reproduce

struct Cell {
  std::string row, column, computed, expected;
  double diff = 0, tol = 0;
  bool pass = false;
  std::string note;
};

struct Report {
  std::string table;
  std::vector<Cell> cells;

  bool all_pass() const {
    return std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.pass; });
  }
  void write_csv(std::ostream& os, const RunInfo& info) const {
    write_header(os, info);
    os << "table,row,column,computed,expected,diff,tol,pass,note\n";
    for (const auto& c : cells)
      os << table << ',' << c.row << ',' << c.column << ',' << c.computed << ',' << c.expected << ',' << fmt(c.diff, 3) << ','
         << fmt(c.tol, 3) << ',' << (c.pass ? "pass" : "FAIL") << ',' << c.note << '\n';
  }
  void write_summary(std::ostream& os) const {
    for (const auto& c : cells)
      os << (c.pass ? "pass " : "FAIL ") << table << ' ' << c.row << ' ' << c.column << "  computed " << c.computed << "  expected "
         << c.expected << (c.note.empty() ? "" : "  (" + c.note + ")") << '\n';
    const auto ok = std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.pass; });
    os << "table " << table << ": " << ok << "/" << cells.size() << " cells pass\n";
  }
};

struct ReproduceConfig {
  std::string table;
  std::optional<std::uint64_t> seed;
  int n_max = 6;
  int d_max = 4;
  std::string column = "Q2";
  std::string rows;
  int seeds = 8;
  Eigen::Index bond = 0;  ///< 0: the bond dimension tabulated for the row (4 for 222)
  std::string quantum = "tabulated";
  std::string out_dir;
};

inline Cell numeric_cell(std::string row, std::string column, double computed, double expected, double tol, std::string note = {}) {
  Cell c{std::move(row), std::move(column), fmt(computed, 10), fmt(expected, 10), std::abs(computed - expected), tol, false, std::move(note)};
  c.pass = std::isfinite(computed) && c.diff <= tol;
  return c;
}

inline Report reproduce_table_i(const ReproduceConfig& c) {
  if (c.n_max < 3 || c.n_max > 8) throw UsageError("--n-max must lie in [3, 8]");
  const auto& f = catalog_entry("222/1");
  const auto& ref = catalog_reference("222/1").at("ltins");
  Report r{"I", {}};
  std::map<int, Rational> got;
  for (int n = 3; n <= c.n_max; ++n) got[n] = solve_exact(build_ltins(f, n)).value;
  for (const auto& fit : fitted_sequence_check(got)) {
    const Rational expected = parse_rational(ref.at(std::to_string(fit.n)).get<std::string>());
    Cell cell{"n=" + std::to_string(fit.n), "LTI-NS", to_string(fit.value), to_string(expected), std::abs(to_double(fit.value - expected)), 0,
              fit.value == expected, ""};
    r.cells.push_back(cell);
    Cell fc{"n=" + std::to_string(fit.n), "fit residual", to_string(fit.residual), "0", std::abs(to_double(fit.residual)), 0, fit.exact, ""};
    r.cells.push_back(fc);
  }
  return r;
}

inline Report reproduce_table_ii(const ReproduceConfig& c) {
  if (c.d_max < 2 || c.d_max > 6) throw UsageError("--d-max must lie in [2, 6]");
  const auto& f = catalog_entry("222/1");
  Report r{"II", {}};
  for (const auto& q : catalog_reference("222/1").at("quantum")) {
    const int d = q.at("d").get<int>();
    if (d > c.d_max) continue;
    const Signature sig{d, q.at("signature").get<std::vector<int>>()};
    const Ansatz a = ansatz_for_reference(f, sig);
    DescentOptions o;
    o.bond = c.bond > 0 ? c.bond : 4;
    const auto runs = multi_start(f, a, c.seeds, *c.seed, o);
    const auto& best = best_of(runs);
    double lowest = best.e;
    for (const auto& run : runs)
      for (const auto& row : run.trace.rows) lowest = std::min(lowest, row.e);
    const std::string row = "d=" + std::to_string(d);
    r.cells.push_back(numeric_cell(row, "Q", best.e, -2.0, 1e-4, a.label));
    Cell floor{row, "lowest iterate", fmt(lowest, 10), ">= -2.0001", 0, 1e-4, lowest >= -2 - 1e-4, "over all seeds and iterations"};
    r.cells.push_back(floor);
    if (d == 2) {
      const RVec ev = hermitian_eigenvalues(two_site_density(best.state.state));
      const double second = ev(ev.size() - 2);
      Cell rank{row, "rho2 second eigenvalue", fmt(second, 3), "< 1e-6", std::abs(second), 1e-6, std::abs(second) < 1e-6, "rank-1 projector"};
      r.cells.push_back(rank);
    }
  }
  return r;
}

inline std::vector<std::string> table_rows(const std::string& prefix, int count, const std::string& selection) {
  std::vector<int> ids = selection.empty() ? std::vector<int>{} : parse_int_list(selection);
  if (ids.empty())
    for (int i = 1; i <= count; ++i) ids.push_back(i);
  std::vector<std::string> out;
  for (int i : ids) {
    if (i < 1 || i > count) throw UsageError("row " + std::to_string(i) + " out of range 1.." + std::to_string(count));
    out.push_back(prefix + std::to_string(i));
  }
  return out;
}

inline Report reproduce_table_iii(const ReproduceConfig& c) {
  if (c.quantum != "tabulated" && c.quantum != "computed") throw UsageError("--quantum must be 'tabulated' or 'computed'");
  Report r{"III", {}};
  for (const auto& id : table_rows("322/", 10, c.rows)) {
    const auto& f = catalog_entry(id);
    const auto& ref = catalog_reference(id);
    const double npa_tab = ref.at("npa_5_1").get<double>();
    const int dstar = ref.at("npa_matched_d").get<int>();
    nlohmann::json qref;
    for (const auto& q : ref.at("quantum"))
      if (q.at("d").get<int>() == dstar) qref = q;
    const double npa = solve_sdp(build_ltinpa(f, 5)).certified;
    r.cells.push_back(numeric_cell(id, "LTI-NPA(5,1)", npa, npa_tab, 1e-3, "certified"));
    double q = qref.at("Q").get<double>();
    std::string note = "tabulated Q_" + std::to_string(dstar);
    if (c.quantum == "computed") {
      const Signature sig{dstar, qref.at("signature").get<std::vector<int>>()};
      DescentOptions o;
      o.bond = c.bond > 0 ? c.bond : qref.at("D").get<Eigen::Index>();
      q = best_of(multi_start(f, ansatz_for_reference(f, sig), c.seeds, *c.seed, o)).e;
      r.cells.push_back(numeric_cell(id, "Q_" + std::to_string(dstar), q, qref.at("Q").get<double>(), 1e-3, "D=" + std::to_string(o.bond)));
      Cell sandwich{id, "NPA <= Q", fmt(npa, 10), "<= " + fmt(q, 10), npa - q, 1e-6, npa <= q + 1e-6, ""};
      r.cells.push_back(sandwich);
      note = "computed Q_" + std::to_string(dstar);
    }
    r.cells.push_back(numeric_cell(id, "|Q - NPA|", q, npa, 2e-3, note));
  }
  return r;
}

inline Report reproduce_table_vi(const ReproduceConfig& c) {
  const std::string col = c.column;
  if (col != "Q2" && col != "Q3" && col != "Q4" && col != "NPA") throw UsageError("--column must be Q2, Q3, Q4 or NPA");
  Report r{"VI", {}};
  for (const auto& id : table_rows("232/", 5, c.rows)) {
    const auto& f = catalog_entry(id);
    const auto& ref = catalog_reference(id);
    if (col == "NPA") {
      r.cells.push_back(numeric_cell(id, "LTI-NPA(4,1)", solve_sdp(build_ltinpa(f, 4)).certified, ref.at("npa_4_1").get<double>(), 1e-3, "certified"));
    } else if (col == "Q2") {
      const auto res = povm_descend(f, *c.seed);
      const double L = to_double(classical_bound(f));
      auto cell = numeric_cell(id, "Q2", res.e, L, 1e-5, "attempts " + std::to_string(res.attempts));
      r.cells.push_back(cell);
      Cell im{id, "max imag", fmt(res.max_imag, 3), "< 1e-10", res.max_imag, 1e-10, res.max_imag < 1e-10, ""};
      r.cells.push_back(im);
    } else {
      const int d = col == "Q3" ? 3 : 4;
      nlohmann::json qref;
      for (const auto& q : ref.at("quantum"))
        if (q.at("d").get<int>() == d) qref = q;
      const Signature sig{d, qref.at("signature").get<std::vector<int>>()};
      DescentOptions o;
      o.bond = c.bond > 0 ? c.bond : qref.at("D").get<Eigen::Index>();
      const double q = best_of(multi_start(f, general_ansatz(sig), c.seeds, *c.seed, o)).e;
      r.cells.push_back(numeric_cell(id, col, q, qref.at("Q").get<double>(), 1e-3, "D=" + std::to_string(o.bond)));
    }
  }
  return r;
}

inline int cmd_reproduce(const ReproduceConfig& c, std::ostream& out) {
  if (!c.seed) throw UsageError("reproduce requires --seed");
  Report r;
  if (c.table == "I") r = reproduce_table_i(c);
  else if (c.table == "II") r = reproduce_table_ii(c);
  else if (c.table == "III") r = reproduce_table_iii(c);
  else if (c.table == "VI") r = reproduce_table_vi(c);
  else throw UsageError("unknown table '" + c.table + "' (I, II, III, VI)");
  RunInfo info{"reproduce " + c.table, "", {}, *c.seed};
  info.set("n_max", c.n_max).set("d_max", c.d_max).set("column", c.column).set("rows", c.rows.empty() ? "all" : c.rows);
  info.set("seeds", c.seeds).set("D", c.bond).set("quantum", c.quantum);
  if (!c.out_dir.empty()) {
    ensure_dir(c.out_dir);
    auto os = open_out(fs::path(c.out_dir) / ("table_" + c.table + ".csv"));
    r.write_csv(os, info);
  }
  r.write_summary(out);
  return r.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// surfaces and plot data

struct SurfaceConfig {
  std::string functional;
  int d = 2;
  std::string signature;
  std::string ansatz = "structured";
  int variant = 1;
  std::string w1 = "-2:2:0.1", w2 = "-2:2:0.1";
  Eigen::Index bond = 5;
  std::string out;
};

inline int cmd_surface(const SurfaceConfig& c, std::ostream& out) {
  const BellFunctional f = resolve_functional(c.functional);
  const auto w1 = parse_axis(c.w1), w2 = parse_axis(c.w2);
  const Ansatz a = make_ansatz(f, c.d, c.signature, c.ansatz, c.variant);
  if (a.parameter_count() != 2)
    throw UsageError("surface needs a two-parameter ansatz, " + a.label + " has " + std::to_string(a.parameter_count()));
  const Surface s = scan_surface(f, a, w1, w2, c.bond);
  RunInfo info{"surface", f.id, {}, 0};
  info.set("d", c.d).set("ansatz", a.label).set("w1", c.w1).set("w2", c.w2).set("D", c.bond);
  std::ofstream file;
  std::ostream* os = &out;
  if (!c.out.empty()) {
    if (fs::path(c.out).has_parent_path()) ensure_dir(fs::path(c.out).parent_path().string());
    file = open_out(c.out);
    os = &file;
  }
  write_header(*os, info);
  write_surface_csv(*os, s);
  Eigen::Index i, j;
  const double emin = s.e.minCoeff(&i, &j);
  out << "grid minimum " << fmt(emin, 10) << " at (" << fmt(s.w1[static_cast<std::size_t>(i)], 6) << ", "
      << fmt(s.w2[static_cast<std::size_t>(j)], 6) << ")\n";
  return 0;
}

struct PlotConfig {
  std::string figure;  ///< fig2 or fig3
  std::string functional = "322/1";
  int d = 2;
  std::string signature;
  std::string ansatz = "structured";
  int variant = 1;
  Eigen::Index bond = 7;
  std::uint64_t seed = 1;
  int n_max = 8;
  int exact_max = 6;
  std::string out_dir = ".";
  bool svg = false;
};

inline int cmd_plotdata(const PlotConfig& c, std::ostream& out) {
  ensure_dir(c.out_dir);
  if (c.figure == "fig3") {
    if (c.n_max < 3 || c.n_max > 8) throw UsageError("--n-max must lie in [3, 8]");
    const auto& f = catalog_entry("222/1");
    RunInfo info{"plotdata fig3", f.id, {}, 0};
    info.set("n_max", c.n_max).set("exact_max", c.exact_max);
    auto os = open_out(fs::path(c.out_dir) / "fig3_ltins.csv");
    write_header(os, info);
    os << "n,value,decimal,fit,fit_decimal,residual\n";
    Series pts{"LTI-NS_n", {}, {}, "#1f77b4"}, fit{"-2 - 4/(n^2-3n+6)", {}, {}, "#d62728"};
    for (int n = 3; n <= c.n_max; ++n) {
      const auto lp = build_ltins(f, n);
      const Rational fv = fitted_value(n);
      if (n <= c.exact_max) {
        const Rational v = solve_exact(lp).value;
        os << n << ',' << to_string(v) << ',' << decimal(v, 12) << ',' << to_string(fv) << ',' << decimal(fv, 12) << ',' << to_string(v - fv) << '\n';
        pts.x.push_back(n), pts.y.push_back(to_double(v));
      } else {
        const double v = solve_float(lp);
        os << n << ",," << fmt(v, 12) << ',' << to_string(fv) << ',' << decimal(fv, 12) << ',' << fmt(v - to_double(fv), 3) << '\n';
        pts.x.push_back(n), pts.y.push_back(v);
      }
      fit.x.push_back(n), fit.y.push_back(to_double(fv));
      out << "n=" << n << " done\n";
    }
    if (c.svg) {
      auto svg = open_out(fs::path(c.out_dir) / "fig3_ltins.svg");
      write_line_svg(svg, {pts, fit}, "LTI-NS_n lower bounds, 222", "n", "bound");
    }
    return 0;
  }
  if (c.figure == "fig2") {
    const BellFunctional f = resolve_functional(c.functional);
    const Ansatz a = make_ansatz(f, c.d, c.signature, c.ansatz, c.variant);
    DescentOptions o;
    o.bond = c.bond;
    const auto r = descend(f, a, c.seed, o);
    RunInfo info{"plotdata fig2", f.id, {}, c.seed};
    info.set("d", c.d).set("ansatz", a.label).set("D", c.bond);
    auto os = open_out(fs::path(c.out_dir) / "fig2_convergence.csv");
    write_header(os, info);
    write_trace_csv(os, r.trace);
    if (c.svg) {
      Series e{"e(k)", {}, {}, "#1f77b4"}, L{"classical bound", {}, {}, "#7f7f7f"};
      const double bound = to_double(classical_bound(f));
      for (const auto& row : r.trace.rows) {
        e.x.push_back(row.k), e.y.push_back(row.e);
        L.x.push_back(row.k), L.y.push_back(bound);
      }
      auto svg = open_out(fs::path(c.out_dir) / "fig2_convergence.svg");
      write_line_svg(svg, {e, L}, "energy density during descent, " + f.id, "k", "e");
    }
    out << "final e " << fmt(r.e, 10) << " after " << r.trace.rows.size() << " iterations\n";
    return 0;
  }
  throw UsageError("unknown figure '" + c.figure + "' (fig2, fig3)");
}

}  // namespace ticontext::cli
