#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "ticontext/functionals.hpp"
#include "ticontext/observables.hpp"

using namespace ticontext;

namespace {

CMat random_dichotomic(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  std::vector<double> w(basis_size(d, BasisKind::full));
  for (auto& x : w) x = nd(rng);
  return build_observable(static_cast<int>(rng() % (d + 1)), d, w, BasisKind::full).matrix;
}

CVec random_state(int d, std::mt19937_64& rng) {
  CVec v = random_complex(d, 1, rng);
  return v / v.norm();
}

double expect(const CVec& v, const CMat& o) { return (v.adjoint() * o * v)(0, 0).real(); }

}  // namespace

TEST(Catalog, Counts) {
  const auto& all = catalog();
  ASSERT_EQ(all.size(), 69u);
  int n222 = 0, n322 = 0, n232 = 0;
  for (const auto& f : all) {
    ASSERT_TRUE(f.classical_bound.has_value()) << f.id;
    if (f.scenario == Scenario::nn2) ++n222;
    if (f.scenario == Scenario::nnn2) ++n322;
    if (f.scenario == Scenario::nn3) ++n232;
  }
  EXPECT_EQ(n222, 1);
  EXPECT_EQ(n322, 63);
  EXPECT_EQ(n232, 5);
}

TEST(Catalog, Entry222) {
  const auto& f = catalog_entry("222/1");
  EXPECT_EQ(f.one, (std::vector<Rational>{2, 0}));
  EXPECT_EQ(f.nn[0], (std::vector<Rational>{1, 1}));
  EXPECT_EQ(f.nn[1], (std::vector<Rational>{-1, -1}));
  EXPECT_EQ(*f.classical_bound, -2);
}

TEST(Catalog, Entry322Row5) {
  const auto& f = catalog_entry("322/5");
  EXPECT_EQ(f.one, (std::vector<Rational>{-11, 1}));
  EXPECT_EQ(f.nn[0], (std::vector<Rational>{5, 2}));
  EXPECT_EQ(f.nn[1], (std::vector<Rational>{2, -1}));
  EXPECT_EQ(f.nnn[0], (std::vector<Rational>{4, -1}));
  EXPECT_EQ(f.nnn[1], (std::vector<Rational>{-2, 1}));
  EXPECT_EQ(*f.classical_bound, -8);
}

TEST(Catalog, Entry232Row5) {
  const auto& f = catalog_entry("232/5");
  for (const auto& v : f.one) EXPECT_EQ(v, 0);
  const std::vector<std::vector<Rational>> nn{{1, 1, 0}, {0, 0, 0}, {-1, 1, 0}};
  EXPECT_EQ(f.nn, nn);
  EXPECT_EQ(*f.classical_bound, -2);
}

TEST(Catalog, DataFileMatchesEmbeddedCopy) {
  std::ifstream in(std::string(TICONTEXT_SOURCE_DIR) + "/data/catalog.json");
  ASSERT_TRUE(in);
  nlohmann::json disk;
  in >> disk;
  EXPECT_EQ(disk, catalog_json());
  EXPECT_EQ(catalog_version(), disk.at("catalog_version").get<std::string>());
}

TEST(Catalog, UnknownIdThrows) {
  EXPECT_THROW(catalog_entry("322/64"), std::invalid_argument);
  EXPECT_THROW(resolve_functional("/nonexistent/f.json"), std::invalid_argument);
}

TEST(FunctionalJson, RoundTripAndRationals) {
  const auto j = nlohmann::json::parse(R"({"scenario":"322","couplings":{"Jx":"-3/2","JACyx":4},"classical_bound":-8})");
  const auto f = functional_from_json(j);
  EXPECT_EQ(f.one[0], Rational(-3, 2));
  EXPECT_EQ(f.nnn[1][0], 4);
  const auto g = functional_from_json(functional_to_json(f));
  EXPECT_EQ(g.one, f.one);
  EXPECT_EQ(g.nnn, f.nnn);
  EXPECT_EQ(*g.classical_bound, -8);
}

TEST(FunctionalJson, Errors) {
  EXPECT_THROW(functional_from_json(nlohmann::json::parse(R"({"scenario":"222","couplings":{"JACxx":1}})")),
               std::invalid_argument);
  EXPECT_THROW(functional_from_json(nlohmann::json::parse(R"({"scenario":"222","couplings":{"Jz":1}})")),
               std::invalid_argument);
  EXPECT_THROW(functional_from_json(nlohmann::json::parse(R"({"scenario":"422","couplings":{}})")),
               std::invalid_argument);
  EXPECT_THROW(
      functional_from_json(nlohmann::json::parse(R"({"scenario":"222","couplings":{},"classical_bound":"1/2"})")),
      std::invalid_argument);
}

TEST(LocalTerm, ZeroCouplings) {
  std::mt19937_64 rng(1);
  for (auto s : {Scenario::nn2, Scenario::nnn2, Scenario::nn3}) {
    std::vector<CMat> obs;
    for (int a = 0; a < settings_per_site(s); ++a) obs.push_back(random_dichotomic(3, rng));
    const CMat h = local_term(BellFunctional::zero(s), obs);
    EXPECT_EQ(h.rows(), s == Scenario::nnn2 ? 27 : 9);
    EXPECT_EQ(h.cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(LocalTerm, ClassicalProductState) {
  const auto& f = catalog_entry("222/1");
  CMat lam = CMat::Zero(2, 2);
  lam(0, 0) = 1;
  lam(1, 1) = -1;
  const CMat h = local_term(f, {lam, lam});
  CVec one = CVec::Zero(4);
  one(3) = 1.0;  // |1>|1>
  EXPECT_NEAR(expect(one, h), -2.0, 1e-15);
}

TEST(LocalTerm, ProductExpectationMatchesCorrelators) {
  std::mt19937_64 rng(5);
  for (const auto& id : {"222/1", "322/17", "232/2"}) {
    const auto& f = catalog_entry(id);
    const int x = f.settings();
    for (int d : {2, 3}) {
      std::vector<CMat> obs;
      for (int a = 0; a < x; ++a) obs.push_back(random_dichotomic(d, rng));
      std::vector<CVec> sites;
      for (int i = 0; i < window_size(f.scenario); ++i) sites.push_back(random_state(d, rng));
      CVec psi = sites[0];
      for (std::size_t i = 1; i < sites.size(); ++i) psi = kron(psi, sites[i]);
      // scalar oracle from single-site expectations
      double oracle = 0;
      for (int a = 0; a < x; ++a) {
        oracle += to_double(f.one[a]) * expect(sites[0], obs[a]);
        for (int b = 0; b < x; ++b) {
          oracle += to_double(f.nn[a][b]) * expect(sites[0], obs[a]) * expect(sites[1], obs[b]);
          if (f.scenario == Scenario::nnn2)
            oracle += to_double(f.nnn[a][b]) * expect(sites[0], obs[a]) * expect(sites[2], obs[b]);
        }
      }
      const CMat h = local_term(f, obs);
      EXPECT_LT(hermiticity_error(h), 1e-12);
      EXPECT_NEAR(expect(psi, h), oracle, 1e-10) << id << " d=" << d;
    }
  }
}

TEST(LocalTerm, LinearInCouplings) {
  std::mt19937_64 rng(9);
  const auto& f = catalog_entry("322/3");
  const auto& g = catalog_entry("322/40");
  std::vector<CMat> obs{random_dichotomic(2, rng), random_dichotomic(2, rng)};
  BellFunctional sum = f;
  for (int a = 0; a < 2; ++a) {
    sum.one[a] += 3 * g.one[a];
    for (int b = 0; b < 2; ++b) {
      sum.nn[a][b] += 3 * g.nn[a][b];
      sum.nnn[a][b] += 3 * g.nnn[a][b];
    }
  }
  EXPECT_LT((local_term(sum, obs) - local_term(f, obs) - 3 * local_term(g, obs)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LocalTerm, DimensionMismatch) {
  const auto& f = catalog_entry("222/1");
  EXPECT_THROW(local_term(f, {identity(2)}), std::invalid_argument);
  EXPECT_THROW(local_term(f, {identity(2), identity(3)}), std::invalid_argument);
}

TEST(BlockNnn, ZeroAndOneBody) {
  EXPECT_EQ(block_nnn(CMat::Zero(8, 8), 2).cwiseAbs().maxCoeff(), 0.0);
  std::mt19937_64 rng(2);
  const CMat s = random_dichotomic(2, rng);
  const CMat h3 = kron(s, identity(2), identity(2));
  const CVec v = random_state(2, rng);
  // symmetric product state: blocks |vv>, chain of blocks |vvvv>
  const CVec four = kron(kron(v, v), kron(v, v));
  EXPECT_NEAR(expect(four, block_nnn(h3, 2)), 2 * expect(v, s), 1e-12);
  EXPECT_THROW(block_nnn(CMat::Zero(9, 9), 2), std::invalid_argument);
}

TEST(BlockNnn, PeriodTwoProductChain) {
  std::mt19937_64 rng(4);
  for (int d : {2, 3}) {
    const CMat h3 = random_hermitian(d * d * d, rng);
    const CVec p = random_state(d, rng), q = random_state(d, rng);
    // chain ... p q p q ...; blocks (p q)
    const CVec blk = kron(p, q);
    const double e_blk = expect(kron(blk, blk), block_nnn(h3, d));
    // per-site energy, dense three-site windows starting at p and at q
    const double e_site = 0.5 * (expect(kron(kron(p, q), p), h3) + expect(kron(kron(q, p), q), h3));
    EXPECT_NEAR(e_blk / 2, e_site, 1e-12);
  }
}

TEST(Evaluate, Basic) {
  const auto& f = catalog_entry("222/1");
  Correlators<Rational> zero{{0, 0}, {{0, 0}, {0, 0}}, {}};
  EXPECT_EQ(evaluate(f, zero), 0);
  // deterministic assignment s_x = s_y = -1 on every site
  Correlators<Rational> det{{-1, -1}, {{1, 1}, {1, 1}}, {}};
  EXPECT_EQ(evaluate(f, det), -2);
  Correlators<Rational> missing{{-1, -1}, {}, {}};
  EXPECT_THROW(evaluate(f, missing), std::invalid_argument);
}

TEST(Evaluate, Row322DeterministicAssignment) {
  const auto& f = catalog_entry("322/1");
  // s_x = s_y = -1: one-body moments -1, all pair moments +1
  Correlators<Rational> det{{-1, -1}, {{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}};
  Rational expect_val = -(f.one[0] + f.one[1]);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) expect_val += f.nn[a][b] + f.nnn[a][b];
  EXPECT_EQ(evaluate(f, det), expect_val);
  EXPECT_GE(evaluate(f, det), *f.classical_bound);
  Correlators<Rational> no_nnn{{-1, -1}, {{1, 1}, {1, 1}}, {}};
  EXPECT_THROW(evaluate(f, no_nnn), std::invalid_argument);
}

TEST(Evaluate, MatchesProductStateEnergy) {
  std::mt19937_64 rng(8);
  for (const auto& id : {"222/1", "322/9", "232/4"}) {
    const auto& f = catalog_entry(id);
    const int x = f.settings();
    std::vector<CMat> obs;
    for (int a = 0; a < x; ++a) obs.push_back(random_dichotomic(2, rng));
    const CVec v = random_state(2, rng);
    Correlators<double> c;
    for (int a = 0; a < x; ++a) {
      c.one.push_back(expect(v, obs[a]));
      c.nn.emplace_back();
      for (int b = 0; b < x; ++b) c.nn.back().push_back(expect(v, obs[a]) * expect(v, obs[b]));
    }
    if (f.scenario == Scenario::nnn2) c.nnn = c.nn;
    CVec psi = kron(v, v);
    if (f.scenario == Scenario::nnn2) psi = kron(psi, v);
    EXPECT_NEAR(evaluate(f, c), expect(psi, local_term(f, obs)), 1e-10) << id;
  }
}
