#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ticontext/classical.hpp"
#include "ticontext/functionals.hpp"
#include "ticontext/observables.hpp"
#include "ticontext/umps.hpp"

using namespace ticontext;

namespace {

CMat pauli_x() {
  CMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMat pauli_z() {
  CMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Transverse-field Ising term -ZZ - g (X + X)/2 and its exact energy density.
CMat ising_term(double g) {
  const CMat id = identity(2);
  return -kron(pauli_z(), pauli_z()) - 0.5 * g * (kron(pauli_x(), id) + kron(id, pauli_x()));
}

double ising_exact(double g) {
  // e = -(1/pi) int_0^pi sqrt(1 + g^2 + 2 g cos k) dk, composite Simpson
  const int n = 20000;
  double s = 0;
  for (int i = 0; i <= n; ++i) {
    const double k = M_PI * i / n;
    const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    s += w * std::sqrt(1 + g * g + 2 * g * std::cos(k));
  }
  return -s * (M_PI / n) / 3 / M_PI;
}

// Energy density on a ring of N sites from dense transfer-matrix powers.
double ring_energy(const SiteTensor& A, const CMat& h, int N) {
  const Eigen::Index d = static_cast<Eigen::Index>(A.size());
  const CMat t = transfer_matrix_dense(A);
  CMat eh = CMat::Zero(t.rows(), t.cols());
  for (Eigen::Index s = 0; s < d; ++s)
    for (Eigen::Index tt = 0; tt < d; ++tt)
      for (Eigen::Index u = 0; u < d; ++u)
        for (Eigen::Index v = 0; v < d; ++v) {
          const cplx c = h(s * d + tt, u * d + v);
          if (c != cplx(0)) eh += c * kron((A[s] * A[tt]).conjugate(), A[u] * A[v]);
        }
  // normalize the spectral radius to keep powers bounded
  Eigen::ComplexEigenSolver<CMat> es(t);
  double rho = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) rho = std::max(rho, std::abs(es.eigenvalues()(i)));
  CMat tn = identity(t.rows());
  for (int i = 0; i < N - 2; ++i) tn = tn * (t / rho);
  const cplx num = (eh / (rho * rho) * tn).trace();
  const cplx den = (tn * (t / rho) * (t / rho)).trace();
  return (num / den).real();
}

}  // namespace

TEST(FixedPoints, ProductState) {
  SiteTensor A{CMat::Constant(1, 1, 0.6), CMat::Constant(1, 1, cplx(0, 0.8))};
  const auto fp = fixed_points(A);
  EXPECT_NEAR(fp.lambda, 1.0, 1e-14);
  EXPECT_NEAR(fp.l(0, 0).real(), 1.0, 1e-14);
  EXPECT_NEAR(fp.r(0, 0).real(), 1.0, 1e-14);
}

TEST(FixedPoints, LeftCanonicalGaugeHasIdentityLeft) {
  const auto g = mixed_gauge(random_umps(3, 4, 5).A);
  const auto fp = fixed_points(g.AL);
  EXPECT_NEAR(fp.lambda, 1.0, 1e-12);
  const CMat lnorm = fp.l / fp.l(0, 0);
  EXPECT_LT((lnorm - identity(4)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(FixedPoints, MatchesDenseDiagonalization) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (Eigen::Index D : {1, 2, 3}) {
      const auto m = random_umps(2, D, seed);
      const auto fp = fixed_points(m.A);
      Eigen::ComplexEigenSolver<CMat> es(transfer_matrix_dense(m.A));
      double lead = 0;
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) lead = std::max(lead, std::abs(es.eigenvalues()(i)));
      EXPECT_NEAR(fp.lambda, lead, 1e-10 * lead);
      // invariants
      const SiteTensor An = normalized(m.A, fp);
      EXPECT_LT((transfer_right(An, fp.r) - fp.r).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_LT((transfer_left(An, fp.l) - fp.l).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_NEAR((fp.l * fp.r).trace().real(), 1.0, 1e-12);
      EXPECT_GT(hermitian_eigenvalues(fp.l).minCoeff(), -1e-10);
      EXPECT_GT(hermitian_eigenvalues(fp.r).minCoeff(), -1e-10);
      EXPECT_LT(hermiticity_error(fp.l), 1e-12);
    }
  }
}

TEST(FixedPoints, NonInjectiveDetected) {
  // block-diagonal tensor with two identical blocks: doubly degenerate leading eigenvalue
  const auto m = random_umps(2, 2, 3);
  SiteTensor A;
  for (const auto& a : m.A) {
    CMat b = CMat::Zero(4, 4);
    b.topLeftCorner(2, 2) = a;
    b.bottomRightCorner(2, 2) = a;
    A.push_back(b);
  }
  EXPECT_THROW(fixed_points(A), NonInjectiveError);
}

TEST(EnergyDensity, IdentityTermIsOne) {
  const auto m = random_umps(3, 3, 8);
  EXPECT_NEAR(energy_density(m.A, identity(9)), 1.0, 1e-12);
}

TEST(EnergyDensity, ClassicalProductState) {
  const auto& f = catalog_entry("222/1");
  const auto obs = structured_pair(Scenario::nn2, 2, 1, std::vector<double>{0.0});
  SiteTensor A{CMat::Zero(1, 1), CMat::Ones(1, 1)};  // |1>
  EXPECT_NEAR(energy_density(A, local_term(f, obs)), -2.0, 1e-14);
}

TEST(EnergyDensity, MatchesRingContraction) {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto m = random_umps(2, 2, seed);
    const CMat h = random_hermitian(4, rng);
    EXPECT_NEAR(energy_density(m.A, h), ring_energy(m.A, h, 200), 1e-9);
  }
}

TEST(EnergyDensity, GaugeInvariantAndReal) {
  std::mt19937_64 rng(4);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto m = random_umps(2, 3, seed);
    const CMat h = random_hermitian(4, rng);
    CMat x = random_complex(3, 3, rng) + 3.0 * identity(3);
    const CMat xi = x.inverse();
    SiteTensor B;
    for (const auto& a : m.A) B.push_back(x * a * xi);
    EXPECT_NEAR(energy_density(m.A, h), energy_density(B, h), 1e-10);
    const cplx e = (h * reduced_density(m.A, 2)).trace();
    EXPECT_LT(std::abs(e.imag()), 1e-10);
  }
}

TEST(EnergyDensity, DimensionMismatch) {
  const auto m = random_umps(2, 2, 1);
  EXPECT_THROW(energy_density(m.A, identity(9)), std::invalid_argument);
}

TEST(ReducedDensity, Properties) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto m = random_umps(2, 3, seed);
    for (int k = 1; k <= 3; ++k) {
      const CMat rho = reduced_density(m.A, k);
      EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
      EXPECT_LT(hermiticity_error(rho), 1e-12);
      EXPECT_GT(hermitian_eigenvalues(rho).minCoeff(), -1e-12);
    }
    // the two-site density's marginals are the one-site density
    const CMat r1 = reduced_density(m.A, 1), r2 = reduced_density(m.A, 2);
    EXPECT_LT((trace_right(r2, 2, 2) - r1).cwiseAbs().maxCoeff(), 1e-11);
    EXPECT_LT((trace_left(r2, 2, 2) - r1).cwiseAbs().maxCoeff(), 1e-11);
  }
}

TEST(ReducedDensity, ProductStateIsRankOne) {
  CVec v(2);
  v << 0.6, cplx(0, 0.8);
  SiteTensor A{CMat::Constant(1, 1, v(0)), CMat::Constant(1, 1, v(1))};
  const CMat rho = reduced_density(A, 2);
  const CVec vv = kron(v, v);
  EXPECT_LT((rho - vv * vv.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_THROW(reduced_density(A, 4), std::invalid_argument);
}

TEST(MixedGauge, ConsistentWithGeneric) {
  std::mt19937_64 rng(2);
  const auto m = random_umps(3, 4, 17);
  const auto g = mixed_gauge(m.A);
  const CMat h = random_hermitian(9, rng);
  EXPECT_NEAR(mixed_energy(g, h), energy_density(m.A, h), 1e-10);
  for (Eigen::Index s = 0; s < 3; ++s) EXPECT_LT((g.AL[s] * g.C - g.C * g.AR[s]).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(GroundState, TransverseIsing) {
  for (double g : {0.5, 1.5}) {
    GroundStateOptions opts;
    opts.tol = 1e-9;
    const auto gs = ground_state(ising_term(g), 6, opts);
    EXPECT_TRUE(gs.report.converged);
    EXPECT_LE(gs.report.grad_norm, 1e-9);
    EXPECT_NEAR(gs.report.energy, ising_exact(g), 1e-7);
    EXPECT_NEAR(energy_density(gs.state.AL, ising_term(g)), gs.report.energy, 1e-9);
  }
}

TEST(GroundState, ClassicalTermReachesClassicalBound) {
  // Diagonal observables whose basis states realize every deterministic
  // assignment; for functionals with a period-one classical optimum the
  // ground state is a product state at the classical bound.
  int checked = 0;
  for (const auto& f : catalog()) {
    if (f.scenario == Scenario::nnn2) continue;
    if (brute_force_periodic(f, 1) != classical_bound(f)) continue;
    const int x = f.settings();
    const int d = 1 << x;
    std::vector<CMat> obs(x, CMat::Zero(d, d));
    for (int s = 0; s < d; ++s)
      for (int a = 0; a < x; ++a) obs[a](s, s) = assignment_value(static_cast<unsigned>(s), a);
    const auto gs = ground_state(local_term(f, obs), 2);
    EXPECT_TRUE(gs.report.converged) << f.id;
    EXPECT_NEAR(gs.report.energy, to_double(classical_bound(f)), 1e-8) << f.id;
    ++checked;
  }
  EXPECT_GE(checked, 1);
}

TEST(GroundState, Row1Of322AtTabulatedParameters) {
  const auto& f = catalog_entry("322/1");
  const auto obs = structured_pair(Scenario::nnn2, 3, 1, std::vector<double>{0.7811});
  const auto term = engine_term(f, obs);
  GroundStateOptions opts;
  opts.tol = 1e-7;
  opts.max_iter = 2000;
  const auto gs = ground_state(term.h, 5, opts);
  EXPECT_NEAR(gs.report.energy * term.energy_scale, -6.32747, 1e-3);
}

TEST(GroundState, Bell222AtSmallAngle) {
  const auto& f = catalog_entry("222/1");
  const auto obs = structured_pair(Scenario::nn2, 2, 1, std::vector<double>{1e-5});
  GroundStateOptions opts;
  opts.max_iter = 2000;
  const auto gs = ground_state(local_term(f, obs), 4, opts);
  EXPECT_NEAR(gs.report.energy, -2.0, 1e-4);
  // ground state is a product state: rank-one two-site density
  const RVec ev = hermitian_eigenvalues(two_site_density(gs.state));
  EXPECT_LT(ev(ev.size() - 2), 1e-6);
}

TEST(GroundState, MonotoneInBondDimension) {
  std::mt19937_64 rng(31);
  const CMat h = random_hermitian(4, rng);
  double prev = 1e300;
  for (Eigen::Index D : {1, 2, 4, 6}) {
    GroundStateOptions opts;
    opts.tol = 1e-8;
    opts.max_iter = 3000;
    const auto gs = ground_state(h, D, opts);
    EXPECT_LE(gs.report.energy, prev + 1e-8) << "D=" << D;
    prev = gs.report.energy;
  }
}

TEST(GroundState, DeterministicGivenSeed) {
  std::mt19937_64 rng(6);
  const CMat h = random_hermitian(9, rng);
  GroundStateOptions opts;
  opts.seed = 44;
  opts.tol = 1e-8;
  const auto a = ground_state(h, 3, opts);
  const auto b = ground_state(h, 3, opts);
  EXPECT_EQ(a.report.energy, b.report.energy);
  EXPECT_EQ(a.report.iterations, b.report.iterations);
}

TEST(GroundState, Errors) {
  EXPECT_THROW(ground_state(identity(4), 0), std::invalid_argument);
  EXPECT_THROW(ground_state(identity(5), 2), std::invalid_argument);
  CMat nh = CMat::Zero(4, 4);
  nh(0, 1) = 1;
  EXPECT_THROW(ground_state(nh, 2), std::invalid_argument);
}

TEST(Checkpoint, RoundTripIsBitExact) {
  const auto m = random_umps(2, 3, 99);
  std::stringstream ss;
  write_checkpoint(ss, m, -1.2345678901234567);
  const auto c = read_checkpoint(ss);
  EXPECT_EQ(c.state.seed, 99u);
  EXPECT_EQ(c.energy, -1.2345678901234567);
  ASSERT_EQ(c.state.A.size(), 2u);
  for (int s = 0; s < 2; ++s) EXPECT_EQ((c.state.A[s] - m.A[s]).cwiseAbs().maxCoeff(), 0.0);
  std::stringstream again;
  write_checkpoint(again, c.state, c.energy);
  std::stringstream first;
  write_checkpoint(first, m, -1.2345678901234567);
  EXPECT_EQ(again.str(), first.str());
}
