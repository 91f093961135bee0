#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ticontext/observables.hpp"

using namespace ticontext;

namespace {

CMat b_block(double w) {
  CMat b(2, 2);
  b << std::cos(2 * w), -std::sin(2 * w), -std::sin(2 * w), -std::cos(2 * w);
  return b;
}

CMat diag(std::initializer_list<double> v) {
  CMat m = CMat::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

// Block-diagonal assembly, the direct reading of the structured forms.
CMat blocks(std::initializer_list<CMat> bs) {
  Eigen::Index n = 0;
  for (const auto& b : bs) n += b.rows();
  CMat m = CMat::Zero(n, n);
  Eigen::Index o = 0;
  for (const auto& b : bs) {
    m.block(o, o, b.rows(), b.cols()) = b;
    o += b.rows();
  }
  return m;
}

double max_diff(const CMat& a, const CMat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(SkewBasis, Sizes) {
  EXPECT_EQ(skew_basis(2, BasisKind::real_antisymmetric).size(), 1u);
  EXPECT_EQ(skew_basis(3, BasisKind::real_antisymmetric).size(), 3u);
  EXPECT_EQ(skew_basis(3, BasisKind::full).size(), 6u);
  EXPECT_EQ(skew_basis(5, BasisKind::full).size(), 20u);
  EXPECT_THROW(skew_basis(1, BasisKind::full), std::invalid_argument);
  EXPECT_THROW(parse_basis_kind("diagonal"), std::invalid_argument);
}

TEST(SkewBasis, TwoByTwo) {
  const auto b = skew_basis(2, BasisKind::real_antisymmetric);
  CMat e(2, 2);
  e << 0, 1, -1, 0;
  EXPECT_EQ(max_diff(b[0], e), 0.0);
}

TEST(SkewBasis, SkewAndTraceOrthogonal) {
  for (int d = 2; d <= 5; ++d) {
    const auto b = skew_basis(d, BasisKind::full);
    for (std::size_t i = 0; i < b.size(); ++i) {
      EXPECT_EQ(max_diff(b[i], -b[i].adjoint()), 0.0);
      for (std::size_t j = 0; j < b.size(); ++j) {
        const cplx ip = (b[i].adjoint() * b[j]).trace();
        EXPECT_NEAR(std::abs(ip), i == j ? 2.0 : 0.0, 1e-15);
      }
    }
  }
}

TEST(CanonicalLambda, Layout) {
  EXPECT_EQ(canonical_lambda(3, 2), (RVec(3) << 1, -1, -1).finished());
  EXPECT_EQ(canonical_lambda(3, 1), (RVec(3) << 1, -1, 1).finished());
  EXPECT_EQ(canonical_lambda(5, 2), (RVec(5) << 1, -1, 1, -1, 1).finished());
  EXPECT_EQ(canonical_lambda(4, 3), (RVec(4) << 1, -1, -1, -1).finished());
  EXPECT_EQ(canonical_lambda(2, 0), (RVec(2) << 1, 1).finished());
  EXPECT_EQ(canonical_lambda(2, 2), (RVec(2) << -1, -1).finished());
}

TEST(BuildObservable, ZeroParametersGiveLambda) {
  const std::vector<double> w(6, 0.0);
  const auto o = build_observable(2, 4, w);
  EXPECT_EQ(max_diff(o.matrix, canonical_lambda(4, 2).cast<cplx>().asDiagonal().toDenseMatrix()), 0.0);
}

TEST(BuildObservable, TwoByTwoRotation) {
  for (double w : {0.0, 0.3, M_PI / 4, -1.1}) {
    const std::vector<double> p{w};
    EXPECT_LT(max_diff(build_observable(1, 2, p).matrix, b_block(w)), 1e-14);
  }
  const std::vector<double> p{M_PI / 4};
  CMat expect(2, 2);
  expect << 0, -1, -1, 0;
  EXPECT_LT(max_diff(build_observable(1, 2, p).matrix, expect), 1e-15);
}

TEST(BuildObservable, RandomSpectrumIsDichotomic) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 20; ++trial) {
    for (auto kind : {BasisKind::real_antisymmetric, BasisKind::full}) {
      const int n = trial % 5;
      std::vector<double> w(basis_size(4, kind));
      for (auto& x : w) x = nd(rng);
      const CMat s = build_observable(n, 4, w, kind).matrix;
      // independent solver: complex Schur form
      Eigen::ComplexEigenSolver<CMat> es(s);
      int minus = 0;
      for (Eigen::Index i = 0; i < 4; ++i) {
        const cplx ev = es.eigenvalues()(i);
        EXPECT_LT(std::abs(ev.imag()), 1e-10);
        EXPECT_LT(std::min(std::abs(ev.real() - 1), std::abs(ev.real() + 1)), 1e-10);
        if (ev.real() < 0) ++minus;
      }
      EXPECT_EQ(minus, n);
      EXPECT_LT(max_diff(s * s, identity(4)), 1e-10);
      EXPECT_LT(hermiticity_error(s), 1e-12);
    }
  }
}

TEST(BuildObservable, Errors) {
  const std::vector<double> w(2, 0.1);
  EXPECT_THROW(build_observable(1, 3, w), std::invalid_argument);
  EXPECT_THROW(build_observable(4, 3, std::vector<double>(3, 0.0)), std::invalid_argument);
  CMat bad = diag({1, 0.5});
  EXPECT_THROW(validate_dichotomic(bad, 0), std::runtime_error);
}

TEST(BuildObservable, DiagonalPhaseInsensitivity) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  const int d = 3;
  std::vector<double> w(3);
  for (auto& x : w) x = nd(rng);
  const ObservableFamily fam(canonical_lambda(d, 1), skew_basis(d, BasisKind::real_antisymmetric));
  const CMat base = fam(w);
  for (double delta : {1e-3, 1e-5}) {
    CMat pert = CMat::Zero(d, d);
    pert(1, 1) = cplx(0, delta);
    const CMat u = expm(fam.generator_sum(w) + pert);
    const CMat lam = fam.lambda().cast<cplx>().asDiagonal();
    const CMat moved = u * lam * u.adjoint();
    // Duhamel: |exp(S+P) - exp(S)| <= |P| for skew-Hermitian S, P
    EXPECT_LE((moved - base).norm(), 2 * delta + 1e-14);
  }
  // Lambda = -I: every unitary leaves it fixed
  const ObservableFamily flat(canonical_lambda(d, d), skew_basis(d, BasisKind::full));
  std::vector<double> wf(6);
  for (auto& x : wf) x = nd(rng);
  EXPECT_LT(max_diff(flat(wf), -identity(d)), 1e-13);
}

TEST(StructuredPair, Forms222) {
  const double w1 = 0.65129, w2 = -0.4, w3 = 1.3;
  const CMat lam = diag({1, -1});
  {
    const auto o = structured_pair(Scenario::nn2, 2, 1, std::vector<double>{w1});
    EXPECT_LT(max_diff(o[0], lam), 1e-12);
    EXPECT_LT(max_diff(o[1], b_block(w1)), 1e-12);
  }
  {
    const auto o = structured_pair(Scenario::nn2, 3, 1, std::vector<double>{w1});
    EXPECT_LT(max_diff(o[0], diag({1, -1, -1})), 1e-12);
    EXPECT_LT(max_diff(o[1], blocks({b_block(w1), diag({-1})})), 1e-12);
  }
  {
    const auto o = structured_pair(Scenario::nn2, 4, 1, std::vector<double>{w1, w2});
    EXPECT_LT(max_diff(o[0], blocks({lam, lam})), 1e-12);
    EXPECT_LT(max_diff(o[1], blocks({b_block(w1), b_block(w2)})), 1e-12);
  }
  {
    const auto o = structured_pair(Scenario::nn2, 5, 1, std::vector<double>{w1, w2});
    EXPECT_LT(max_diff(o[0], blocks({lam, lam, diag({1})})), 1e-12);
    EXPECT_LT(max_diff(o[1], blocks({b_block(w1), b_block(w2), diag({1})})), 1e-12);
  }
  {
    const auto o = structured_pair(Scenario::nn2, 6, 1, std::vector<double>{w1, w2, w3});
    EXPECT_LT(max_diff(o[0], blocks({lam, lam, lam})), 1e-12);
    EXPECT_LT(max_diff(o[1], blocks({b_block(w1), b_block(w2), b_block(w3)})), 1e-12);
  }
}

TEST(StructuredPair, Forms322) {
  const double w = 0.7811;
  auto c1 = structured_pair(Scenario::nnn2, 3, 1, std::vector<double>{w});
  EXPECT_LT(max_diff(c1[0], diag({1, -1, 1})), 1e-12);
  EXPECT_LT(max_diff(c1[1], blocks({b_block(w), diag({-1})})), 1e-12);
  EXPECT_EQ(structured_ansatz(Scenario::nnn2, 3, 1).signature().minus_counts, (std::vector<int>{1, 2}));
  auto c2 = structured_pair(Scenario::nnn2, 3, 2, std::vector<double>{w});
  EXPECT_LT(max_diff(c2[0], diag({1, 1, -1})), 1e-12);
  EXPECT_LT(max_diff(c2[1], blocks({diag({1}), b_block(w)})), 1e-12);
  EXPECT_EQ(structured_ansatz(Scenario::nnn2, 3, 2).signature().minus_counts, (std::vector<int>{1, 1}));
  auto c5 = structured_pair(Scenario::nnn2, 5, 2, std::vector<double>{w, 0.2});
  EXPECT_LT(max_diff(c5[1], blocks({b_block(w), b_block(0.2), diag({-1})})), 1e-12);
}

TEST(StructuredPair, Forms232) {
  const auto o = structured_pair(Scenario::nn3, 2, 1, std::vector<double>{0.3, -0.2});
  EXPECT_LT(max_diff(o[0], -identity(2)), 1e-12);
  EXPECT_LT(max_diff(o[1], b_block(0.3)), 1e-12);
  EXPECT_LT(max_diff(o[2], b_block(-0.2)), 1e-12);
  EXPECT_EQ(structured_ansatz(Scenario::nn3, 3, 1).signature().minus_counts, (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(structured_ansatz(Scenario::nn3, 3, 2).signature().minus_counts, (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(structured_ansatz(Scenario::nn3, 4, 1).signature().minus_counts, (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(structured_ansatz(Scenario::nn3, 4, 2).signature().minus_counts, (std::vector<int>{3, 2, 3}));
  EXPECT_EQ(structured_ansatz(Scenario::nn3, 4, 3).signature().minus_counts, (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(structured_ansatz(Scenario::nn3, 4, 4).signature().minus_counts, (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(structured_ansatz(Scenario::nn3, 4, 1).parameter_count(), 18u);
}

TEST(StructuredPair, ZeroParametersGiveLambdaBlocks) {
  for (int d = 2; d <= 6; ++d) {
    const auto a = structured_ansatz(Scenario::nn2, d, 1);
    const auto o = a.observables(std::vector<double>(a.parameter_count(), 0.0));
    EXPECT_LT(max_diff(o[0], o[1]), 1e-15);
  }
}

TEST(StructuredPair, Errors) {
  EXPECT_THROW(structured_ansatz(Scenario::nn2, 7, 1), std::invalid_argument);
  EXPECT_THROW(structured_ansatz(Scenario::nnn2, 3, 3), std::invalid_argument);
  EXPECT_THROW(structured_ansatz(Scenario::nn3, 4, 5), std::invalid_argument);
  EXPECT_THROW(structured_pair(Scenario::nn2, 4, 1, std::vector<double>{0.1}), std::invalid_argument);
}

TEST(Ansatz, DerivativesMatchFiniteDifferences) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  const Ansatz a = general_ansatz(Signature{3, {1, 2}}, BasisKind::full);
  std::vector<double> w(a.parameter_count());
  for (auto& x : w) x = nd(rng);
  const auto der = a.derivatives(w);
  ASSERT_EQ(der.size(), w.size());
  const double h = 1e-6;
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto wp = w, wm = w;
    wp[k] += h;
    wm[k] -= h;
    const CMat fd = (a.observables(wp)[der[k].first] - a.observables(wm)[der[k].first]) / (2 * h);
    EXPECT_LT(max_diff(fd, der[k].second), 1e-8);
  }
}

TEST(EnumerateSignatures, Counting) {
  const auto s22 = enumerate_signatures(2, 2);
  ASSERT_EQ(s22.size(), 9u);
  EXPECT_EQ(s22.front().minus_counts, (std::vector<int>{0, 0}));
  EXPECT_EQ(s22.back().minus_counts, (std::vector<int>{2, 2}));
  EXPECT_EQ(s22[1].minus_counts, (std::vector<int>{0, 1}));
  const auto s23 = enumerate_signatures(2, 3);
  EXPECT_EQ(s23.size(), 27u);
  EXPECT_NE(std::find(s23.begin(), s23.end(), Signature{2, {2, 1, 1}}), s23.end());
  const auto s32 = enumerate_signatures(3, 2);
  EXPECT_EQ(s32.size(), 16u);
  EXPECT_NE(std::find(s32.begin(), s32.end(), Signature{3, {1, 2}}), s32.end());
  EXPECT_NE(std::find(s32.begin(), s32.end(), Signature{3, {1, 1}}), s32.end());
}
