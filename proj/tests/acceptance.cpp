// End-to-end acceptance run: one PASS/FAIL line per criterion, exit code is
// their conjunction. Tolerances are pinned here.
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ticontext/classical.hpp"
#include "ticontext/optimizer.hpp"
#include "ticontext/relax_lp.hpp"
#include "ticontext/relax_sdp.hpp"
#include "ticontext/umps.hpp"

using namespace ticontext;

namespace {

constexpr double kTol222 = 1e-4;
constexpr double kTolQ = 1e-3;
constexpr double kTolNpa = 1e-3;
constexpr double kSandwich = 1e-6;
constexpr double kTolPovm = 1e-5;
constexpr double kImag = 1e-10;
constexpr double kGrad = 1e-5;
constexpr double kGauge = 1e-10;
constexpr double kClip = 1e-8;
constexpr double kFixed = 1e-10;

struct Outcome {
  bool pass = true;
  std::ostringstream log;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    log << "    " << (ok ? "ok   " : "FAIL ") << what << '\n';
  }
};

std::string num(double v, int digits = 8) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

// variational values shared between criteria 4, 5 and 6
std::map<std::string, double> variational;

void classical_bounds(Outcome& o) {
  int checked = 0, bad = 0;
  for (const auto& f : catalog()) {
    if (!f.classical_bound) continue;
    ++checked;
    if (classical_bound(f) != *f.classical_bound) {
      ++bad;
      o.check(false, f.id + " computed " + to_string(classical_bound(f)) + " stored " + to_string(*f.classical_bound));
    }
  }
  o.check(checked == 69, std::to_string(checked) + " functionals with a stored bound (222 + 63 + 5)");
  o.check(bad == 0, std::to_string(bad) + " mismatches");
  o.check(classical_bound(catalog_entry("222/1")) == -2, "222/1 L = -2");
}

void ltins_sequence(Outcome& o) {
  const auto& f = catalog_entry("222/1");
  const std::map<int, Rational> expected{{3, Rational(-8, 3)}, {4, Rational(-12, 5)}, {5, Rational(-9, 4)}, {6, Rational(-13, 6)}};
  std::map<int, Rational> got;
  for (const auto& [n, v] : expected) {
    const auto t0 = std::chrono::steady_clock::now();
    got[n] = solve_exact(build_ltins(f, n)).value;
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.check(got[n] == v, "n=" + std::to_string(n) + " " + to_string(got[n]) + " (" + num(sec, 3) + " s)");
    if (n == 6) o.check(sec < 600, "n=6 under 10 min");
  }
  for (const auto& r : fitted_sequence_check(got))
    o.check(r.exact, "n=" + std::to_string(r.n) + " fit residual " + to_string(r.residual));
}

void no_contextuality_222(Outcome& o) {
  const auto& f = catalog_entry("222/1");
  for (const auto& q : catalog_reference("222/1").at("quantum")) {
    const int d = q.at("d").get<int>();
    if (d > 4) continue;
    const Signature sig{d, q.at("signature").get<std::vector<int>>()};
    const Ansatz a = structured_for_signature(f.scenario, sig).value_or(general_ansatz(sig));
    DescentOptions opts;
    opts.bond = 4;
    const auto runs = multi_start(f, a, 8, 1, opts);
    const auto& best = best_of(runs);
    double lowest = best.e;
    for (const auto& r : runs)
      for (const auto& row : r.trace.rows) lowest = std::min(lowest, row.e);
    o.check(std::abs(best.e + 2) < kTol222, "d=" + std::to_string(d) + " best " + num(best.e, 10) + " (" + a.label + ")");
    o.check(lowest >= -2 - kTol222, "d=" + std::to_string(d) + " lowest iterate " + num(lowest, 10));
    if (d == 2) {
      const RVec ev = hermitian_eigenvalues(two_site_density(best.state.state));
      const double second = ev(ev.size() - 2);
      o.check(std::abs(second) < 1e-6, "d=2 rho2 second eigenvalue " + num(second, 3));
    }
  }
}

void optima_322(Outcome& o) {
  for (const std::string id : {"322/1", "322/2", "322/3"}) {
    const auto& f = catalog_entry(id);
    nlohmann::json q;
    for (const auto& e : catalog_reference(id).at("quantum"))
      if (e.at("d").get<int>() == 3) q = e;
    const Signature sig{3, q.at("signature").get<std::vector<int>>()};
    const Ansatz a = structured_for_signature(f.scenario, sig).value_or(general_ansatz(sig));
    DescentOptions opts;
    opts.bond = q.at("D").get<Eigen::Index>();
    const double e = best_of(multi_start(f, a, 16, 1, opts)).e;
    variational[id] = e;
    const double tab = q.at("Q").get<double>();
    o.check(std::abs(e - tab) < kTolQ && opts.bond <= 8,
            id + " best of 16 " + num(e, 10) + " vs " + num(tab, 6) + " (D=" + std::to_string(opts.bond) + ", " + a.label + ")");
    o.check(e < to_double(classical_bound(f)), id + " below L = " + to_string(classical_bound(f)));
  }
}

void povm_232(Outcome& o) {
  for (int row = 1; row <= 5; ++row) {
    const std::string id = "232/" + std::to_string(row);
    const auto& f = catalog_entry(id);
    const double L = to_double(classical_bound(f));
    const auto r = povm_descend(f, 1);
    double lowest = r.e;
    for (const auto& t : r.trace.rows) lowest = std::min(lowest, t.e);
    variational[id] = r.e;
    o.check(std::abs(r.e - L) < kTolPovm, id + " e " + num(r.e, 10) + " vs L " + num(L, 3) + " (attempts " + std::to_string(r.attempts) + ")");
    o.check(lowest >= L - kTolPovm, id + " lowest iterate " + num(lowest, 10));
    o.check(r.max_imag < kImag, id + " max imag " + num(r.max_imag, 3));
  }
}

void npa_certificates(Outcome& o) {
  // d=5 optimum for 322/9 is not part of criterion 4; computed here for the sandwich
  {
    const auto& f = catalog_entry("322/9");
    const Signature sig{5, {2, 2}};
    DescentOptions opts;
    opts.bond = 5;
    variational["322/9"] = best_of(multi_start(f, structured_for_signature(f.scenario, sig).value_or(general_ansatz(sig)), 4, 1, opts)).e;
  }
  struct Case {
    std::string id;
    int n;
    double expected;
  };
  for (const auto& c : std::vector<Case>{{"322/1", 5, -6.32747}, {"322/3", 5, -3.20711}, {"322/9", 5, -4.41421}, {"232/1", 4, -9.27833}, {"232/5", 4, -2.28767}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = solve_sdp(build_ltinpa(catalog_entry(c.id), c.n));
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.check(std::abs(r.certified - c.expected) < kTolNpa,
            c.id + " LTI-NPA(" + std::to_string(c.n) + ",1) " + num(r.certified, 10) + " vs " + num(c.expected, 6) + " (" + num(sec, 3) + " s)");
    if (variational.count(c.id))
      o.check(r.certified <= variational[c.id] + kSandwich, c.id + " certified <= variational " + num(variational[c.id], 10));
    else
      o.check(false, c.id + " no variational value for the sandwich");
  }
}

void hygiene(Outcome& o) {
  std::mt19937_64 rng(2024);
  {
    const Scenario scenarios[] = {Scenario::nn2, Scenario::nnn2, Scenario::nn3};
    std::uniform_int_distribution<int> u(-3, 3);
    std::normal_distribution<double> nd(0, 1);
    double worst = 0;
    for (int inst = 0; inst < 50; ++inst) {
      const Scenario s = scenarios[inst % 3];
      BellFunctional f = BellFunctional::zero(s, "random");
      for (auto& v : f.one) v = u(rng);
      for (auto& r : f.nn)
        for (auto& v : r) v = u(rng);
      for (auto& r : f.nnn)
        for (auto& v : r) v = u(rng);
      const int d = s == Scenario::nnn2 ? 2 + inst % 2 : 2 + inst % 3;
      std::vector<Signature> sigs;
      for (const auto& sg : enumerate_signatures(d, f.settings()))
        if (std::any_of(sg.minus_counts.begin(), sg.minus_counts.end(), [&](int m) { return m > 0 && m < d; })) sigs.push_back(sg);
      const Ansatz a = general_ansatz(sigs[static_cast<std::size_t>(inst) % sigs.size()], inst % 2 ? BasisKind::full : BasisKind::real_antisymmetric);
      std::vector<double> w(a.parameter_count());
      for (auto& x : w) x = nd(rng);
      const Eigen::Index engine = s == Scenario::nnn2 ? d * d : d;
      const SiteTensor A = random_umps(engine, 2, 100 + static_cast<std::uint64_t>(inst)).A;
      const auto g = gradient(f, a, w, A);
      const auto fd = gradient_fd(f, a, w, A, 1e-5);
      double num2 = 0, den2 = 0;
      for (std::size_t i = 0; i < g.size(); ++i) num2 += (g[i] - fd[i]) * (g[i] - fd[i]), den2 += fd[i] * fd[i];
      worst = std::max(worst, std::sqrt(num2) / std::max(std::sqrt(den2), 1e-12));
    }
    o.check(worst < kGrad, "gradient vs finite differences, 50 instances, worst relative error " + num(worst, 3));
  }
  {
    double worst = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto m = random_umps(2, 3, seed);
      const CMat h = random_hermitian(4, rng);
      const CMat x = random_complex(3, 3, rng) + 3.0 * identity(3);
      const CMat xi = x.inverse();
      SiteTensor B;
      for (const auto& a : m.A) B.push_back(x * a * xi);
      worst = std::max(worst, std::abs(energy_density(m.A, h) - energy_density(B, h)));
    }
    o.check(worst < kGauge, "energy density gauge invariance, worst " + num(worst, 3));
  }
  {
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      const CMat s = (1.0 + i % 4) * random_hermitian(2, rng);
      Eigen::SelfAdjointEigenSolver<CMat> es(s);
      const RVec clipped = es.eigenvalues().cwiseMax(-1.0).cwiseMin(1.0);
      const CMat oracle = es.eigenvectors() * clipped.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
      worst = std::max(worst, (povm_project(s).sigma - oracle).cwiseAbs().maxCoeff());
    }
    o.check(worst < kClip, "povm_project vs eigenvalue clipping, 100 matrices, worst " + num(worst, 3));
  }
  {
    double worst = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
      for (Eigen::Index D : {1, 2, 3}) {
        const auto m = random_umps(2, D, seed);
        const auto fp = fixed_points(m.A);
        Eigen::ComplexEigenSolver<CMat> es(transfer_matrix_dense(m.A));
        double lead = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) lead = std::max(lead, std::abs(es.eigenvalues()(i)));
        worst = std::max(worst, std::abs(fp.lambda - lead) / lead);
        const SiteTensor An = normalized(m.A, fp);
        worst = std::max(worst, (transfer_right(An, fp.r) - fp.r).cwiseAbs().maxCoeff());
        worst = std::max(worst, (transfer_left(An, fp.l) - fp.l).cwiseAbs().maxCoeff());
      }
    o.check(worst < kFixed, "fixed_points vs dense diagonalization, D <= 3, worst " + num(worst, 3));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"classical bounds", classical_bounds},
      {"LTI-NS exact sequence", ltins_sequence},
      {"222 reaches -2 and no lower", no_contextuality_222},
      {"322 rows 1-3 at d=3", optima_322},
      {"LTI-NPA certificates and sandwich", npa_certificates},
      {"232 POVM limit", povm_232},
      {"numerical hygiene", hygiene},
  };
  // criterion 5 reads variational values from 4 and 6, so it runs last
  const std::vector<int> order{0, 1, 2, 3, 5, 4, 6};
  std::vector<bool> pass(criteria.size());
  std::vector<std::string> logs(criteria.size());
  for (int i : order) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[static_cast<std::size_t>(i)].second(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    pass[static_cast<std::size_t>(i)] = o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[static_cast<std::size_t>(i)].first << "  ("
              << num(sec, 4) << " s)\n"
              << o.log.str() << std::flush;
  }
  bool all = true;
  std::cout << "\nsummary\n";
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::cout << "criterion " << i + 1 << ": " << (pass[i] ? "PASS" : "FAIL") << '\n';
    all = all && pass[i];
  }
  return all ? 0 : 1;
}
