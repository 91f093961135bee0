#include <gtest/gtest.h>

#include "ticontext/classical.hpp"
#include "ticontext/relax_lp.hpp"

using namespace ticontext;

namespace {

BellFunctional one_body_x() {
  auto f = BellFunctional::zero(Scenario::nn2, "x");
  f.one[0] = 1;
  return f;
}

// marginal of the table on the site window [lo, lo + len) with the other sites at setting 0
Rational window_marginal(const LtiNsLP& lp, const std::vector<std::vector<Rational>>& p, int lo, int len,
                         std::size_t xw, std::size_t aw) {
  const int n = lp.n;
  std::size_t xc = 0;
  for (int i = 0; i < n; ++i) {
    xc *= static_cast<std::size_t>(lp.x);
    if (i >= lo && i < lo + len) xc += (xw / detail::ipow(static_cast<std::size_t>(lp.x), lo + len - 1 - i)) % static_cast<std::size_t>(lp.x);
  }
  Rational s = 0;
  for (std::size_t a = 0; a < p[xc].size(); ++a)
    if (((a >> (n - lo - len)) & ((std::size_t{1} << len) - 1)) == aw) s += p[xc][a];
  return s;
}

}  // namespace

TEST(LtiNs, Sizes) {
  const auto lp = build_ltins(catalog_entry("222/1"), 2);
  EXPECT_EQ(lp.cols(), 6u);
  EXPECT_EQ(lp.rows, 16u);
  EXPECT_EQ(build_ltins(catalog_entry("222/1"), 6).cols(), 486u);
  EXPECT_EQ(build_ltins(catalog_entry("232/1"), 3).cols(), 3u * 16u);
  const auto box = build_ns_box(catalog_entry("222/1"), 2);
  EXPECT_EQ(box.c.size(), 16u);
}

TEST(LtiNs, Errors) {
  EXPECT_THROW(build_ltins(catalog_entry("222/1"), 1), std::invalid_argument);
  EXPECT_THROW(build_ltins(catalog_entry("322/1"), 2), std::invalid_argument);
  EXPECT_THROW(build_ltins(catalog_entry("222/1"), 9), std::invalid_argument);
  EXPECT_THROW(build_ns_box(catalog_entry("322/1"), 2), std::invalid_argument);
}

TEST(LtiNs, ExactSequence222) {
  const auto& f = catalog_entry("222/1");
  const std::map<int, Rational> expected{{3, Rational(-8, 3)}, {4, Rational(-12, 5)}, {5, Rational(-9, 4)}};
  std::map<int, Rational> got;
  for (const auto& [n, v] : expected) {
    got[n] = ltins_value(f, n);
    EXPECT_EQ(got[n], v) << "n=" << n;
  }
  for (const auto& r : fitted_sequence_check(got)) EXPECT_TRUE(r.exact) << "n=" << r.n;
}

TEST(LtiNs, PlainNsAtTwoSites) {
  // two sites: LTI only equates the one-site marginals, the PR box reaches -4
  EXPECT_EQ(ltins_value(catalog_entry("222/1"), 2), -4);
}

TEST(LtiNs, TableAgreesWithCorrelators) {
  for (const auto& [id, n] : std::vector<std::pair<std::string, int>>{{"222/1", 2}, {"222/1", 3}, {"222/1", 4}, {"322/1", 3},
                                                                      {"322/9", 3}, {"232/1", 2}}) {
    const auto& f = catalog_entry(id);
    EXPECT_EQ(solve_exact(build_ns_box(f, n)).value, ltins_value(f, n)) << id << " n=" << n;
  }
}

TEST(LtiNs, MonotoneInN) {
  for (const std::string id : {"222/1", "322/1", "322/3"}) {
    const auto& f = catalog_entry(id);
    Rational prev = ltins_value(f, window_size(f.scenario));
    for (int n = window_size(f.scenario) + 1; n <= 5; ++n) {
      const Rational v = ltins_value(f, n);
      EXPECT_GE(v, prev) << id << " n=" << n;
      prev = v;
    }
  }
}

TEST(LtiNs, BelowClassicalBound) {
  for (const auto& f : catalog()) {
    const int n = window_size(f.scenario) + 1;
    EXPECT_LE(ltins_value(f, n), classical_bound(f)) << f.id;
  }
}

TEST(LtiNs, OneBodyDeterministic) {
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(ltins_value(one_body_x(), n), -1) << n;
  EXPECT_EQ(ltins_value(BellFunctional::zero(Scenario::nnn2), 3), 0);
}

TEST(LtiNs, OptimalBoxIsExactlyValid) {
  const auto lp = build_ltins(catalog_entry("222/1"), 4);
  const auto r = solve_exact(lp);
  const auto p = box_from_correlators(lp, r.correlators);
  const std::size_t nx = p.size();
  for (std::size_t xc = 0; xc < nx; ++xc) {
    Rational s = 0;
    for (const auto& v : p[xc]) {
      EXPECT_GE(v, 0);
      s += v;
    }
    EXPECT_EQ(s, 1);
  }
  // no-signalling: the marginal on the first three sites is independent of the last setting
  for (std::size_t xc = 0; xc < nx; xc += 2)
    for (std::size_t a = 0; a < 16; a += 2)
      EXPECT_EQ(p[xc][a] + p[xc][a + 1], p[xc + 1][a] + p[xc + 1][a + 1]);
  // LTI: windows [0,3) and [1,4) have equal marginals
  for (std::size_t xw = 0; xw < 8; ++xw)
    for (std::size_t aw = 0; aw < 8; ++aw)
      EXPECT_EQ(window_marginal(lp, p, 0, 3, xw, aw), window_marginal(lp, p, 1, 3, xw, aw));
  // objective read back from the box
  const auto& f = catalog_entry("222/1");
  Rational e = 0;
  for (int a = 0; a < 2; ++a) {
    e += f.one[static_cast<std::size_t>(a)] * r.correlators[lp.index.at({1u, {a}})];
    for (int b = 0; b < 2; ++b) e += f.nn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * r.correlators[lp.index.at({3u, {a, b}})];
  }
  EXPECT_EQ(e, r.value);
}

TEST(LtiNs, DualCertificate) {
  const auto lp = build_ltins(catalog_entry("322/2"), 4);
  const auto r = solve_exact(lp);
  Rational total = 0;
  std::vector<Rational> mt(lp.cols(), Rational(0));
  for (std::size_t i = 0; i < lp.rows; ++i) {
    EXPECT_GE(r.weights[i], 0);
    total += r.weights[i];
    for (std::size_t j = 0; j < lp.cols(); ++j) mt[j] += lp.at(i, j) * r.weights[i];
  }
  EXPECT_EQ(mt, lp.objective);
  EXPECT_EQ(-total, r.value);
}

TEST(LtiNs, FloatAgrees) {
  const auto lp = build_ltins(catalog_entry("222/1"), 5);
  EXPECT_NEAR(solve_float(lp), -2.25, 1e-9);
}

TEST(FittedSequence, Values) {
  EXPECT_EQ(fitted_value(3), Rational(-8, 3));
  EXPECT_EQ(fitted_value(7), Rational(-36, 17));
  Rational tabulated(-62, 30);  // as printed, not in lowest terms
  tabulated.canonicalize();
  EXPECT_EQ(fitted_value(9), tabulated);
  const auto r = fitted_sequence_check({{7, Rational(-36, 17)}, {9, tabulated}});
  EXPECT_TRUE(r[0].exact);
  EXPECT_TRUE(r[1].exact);
}

TEST(FittedSequence, ConstantInput) {
  std::map<int, Rational> in;
  for (int n = 3; n <= 8; ++n) in[n] = -2;
  for (const auto& r : fitted_sequence_check(in)) {
    EXPECT_FALSE(r.exact);
    Rational expected(4, static_cast<unsigned long>(r.n * r.n - 3 * r.n + 6));
    expected.canonicalize();
    EXPECT_EQ(r.residual, expected);
    EXPECT_GT(r.residual, 0);
  }
  EXPECT_THROW(fitted_sequence_check({{2, Rational(-4)}}), std::invalid_argument);
}
