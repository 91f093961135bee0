#include <gtest/gtest.h>

#include <random>

#include "ticontext/classical.hpp"

using namespace ticontext;

TEST(ClassicalBound, Catalog) {
  for (const auto& f : catalog()) EXPECT_EQ(classical_bound(f), *f.classical_bound) << f.id;
}

TEST(ClassicalBound, KnownRows) {
  EXPECT_EQ(classical_bound(catalog_entry("222/1")), -2);
  EXPECT_EQ(classical_bound(catalog_entry("322/5")), -8);
  EXPECT_EQ(classical_bound(catalog_entry("322/19")), -11);
}

TEST(ClassicalBound, ZeroCouplings) {
  for (auto s : {Scenario::nn2, Scenario::nnn2, Scenario::nn3}) {
    EXPECT_EQ(classical_bound(BellFunctional::zero(s)), 0);
    EXPECT_EQ(brute_force_periodic(BellFunctional::zero(s), 3), 0);
  }
}

TEST(ClassicalBound, GraphSizes) {
  EXPECT_EQ(strategy_graph(catalog_entry("222/1")).nodes, 4);
  EXPECT_EQ(strategy_graph(catalog_entry("322/1")).nodes, 16);
  EXPECT_EQ(strategy_graph(catalog_entry("232/1")).nodes, 8);
}

TEST(BruteForce, PeriodOne222) { EXPECT_EQ(brute_force_periodic(catalog_entry("222/1"), 1), -2); }

TEST(BruteForce, AgreesWithKarpOnCatalog) {
  for (const auto& f : catalog()) {
    const int p = f.scenario == Scenario::nn3 ? 5 : 6;
    const Rational bf = brute_force_periodic(f, p);
    const Rational mc = classical_bound(f);
    EXPECT_GE(bf, mc) << f.id;
    EXPECT_EQ(bf, mc) << f.id;  // all tabulated optima have short periods
  }
}

TEST(BruteForce, RandomCouplingsFullPeriod) {
  // period >= node count always contains an optimal simple cycle
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> u(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    BellFunctional f = BellFunctional::zero(Scenario::nn2, "random");
    for (auto& v : f.one) v = u(rng);
    for (auto& r : f.nn)
      for (auto& v : r) v = u(rng);
    EXPECT_EQ(brute_force_periodic(f, 4), classical_bound(f));
  }
  for (int trial = 0; trial < 2; ++trial) {
    BellFunctional f = BellFunctional::zero(Scenario::nnn2, "random");
    for (auto& v : f.one) v = Rational(u(rng), 3);
    for (auto& r : f.nn)
      for (auto& v : r) v = u(rng);
    for (auto& r : f.nnn)
      for (auto& v : r) v = u(rng);
    EXPECT_EQ(brute_force_periodic(f, 8), classical_bound(f));
  }
}

TEST(ClassicalBound, Scaling) {
  for (const auto& id : {"222/1", "322/30", "232/3"}) {
    const auto& f = catalog_entry(id);
    const Rational c(7, 3);
    EXPECT_EQ(classical_bound(f.scaled(c)), c * classical_bound(f));
  }
}
