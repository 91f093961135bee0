#pragma once

// LTI-NS_n: the smallest value of a functional over n-site no-signalling
// boxes whose marginals on sites 1..n-1 and 2..n coincide, solved exactly.
//
// Two formulations are provided. The working one parametrizes a no-signalling
// box by its correlators E_S(x_S) = <prod_{i in S} A_i> for non-empty site
// sets S; no-signalling is then built in, LTI identifies correlators of
// translated sets, and positivity of every probability is the constraint
// sum_S chi_S(a) E_S(x_S) >= -1. The full probability table (NSBoxLP) is
// kept for small n as a cross-check.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ticontext/functionals.hpp"
#include "ticontext/simplex.hpp"

namespace ticontext {

namespace detail {

inline std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

/// Setting of site i in the base-X code of a setting tuple (site 0 most significant).
inline int setting_at(std::size_t code, int i, int n, int x) {
  for (int k = n - 1; k > i; --k) code /= static_cast<std::size_t>(x);
  return static_cast<int>(code % static_cast<std::size_t>(x));
}

}  // namespace detail

/// A translation class of correlators: the site set (bit 0 always set) and
/// the settings on its sites in increasing site order.
struct CorrelatorClass {
  std::uint32_t sites = 0;
  std::vector<int> settings;
};

struct LtiNsLP {
  BellFunctional functional;
  int n = 0;
  int x = 0;
  std::vector<CorrelatorClass> classes;
  std::map<std::pair<std::uint32_t, std::vector<int>>, std::size_t> index;
  std::size_t rows = 0;            ///< 2^n x X^n positivity rows
  std::vector<int> coeff;          ///< rows x classes, row-major
  std::vector<Rational> objective; ///< per class

  std::size_t cols() const { return classes.size(); }
  int at(std::size_t r, std::size_t k) const { return coeff[r * classes.size() + k]; }

  /// Class of the correlator on site set `sites` with the settings of the full tuple `xcode`.
  std::size_t class_of(std::uint32_t sites, std::size_t xcode) const {
    const int shift = std::countr_zero(sites);
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (sites >> i & 1u) s.push_back(detail::setting_at(xcode, i, n, x));
    return index.at({sites >> shift, s});
  }
};

inline LtiNsLP build_ltins(const BellFunctional& f, int n) {
  f.validate();
  const int w = window_size(f.scenario);
  if (n < w) throw std::invalid_argument("build_ltins: n must be at least the window size " + std::to_string(w));
  if (n > 8) throw std::invalid_argument("build_ltins: n > 8 exceeds the supported problem size");
  LtiNsLP lp;
  lp.functional = f;
  lp.n = n;
  lp.x = f.settings();
  const std::size_t nx = detail::ipow(static_cast<std::size_t>(lp.x), n);

  for (std::uint32_t sites = 1; sites < (1u << n); sites += 2) {
    const int k = std::popcount(sites);
    const std::size_t count = detail::ipow(static_cast<std::size_t>(lp.x), k);
    for (std::size_t code = 0; code < count; ++code) {
      CorrelatorClass c{sites, std::vector<int>(static_cast<std::size_t>(k))};
      std::size_t v = code;
      for (int i = k - 1; i >= 0; --i) {
        c.settings[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::size_t>(lp.x));
        v /= static_cast<std::size_t>(lp.x);
      }
      lp.index[{c.sites, c.settings}] = lp.classes.size();
      lp.classes.push_back(std::move(c));
    }
  }

  const std::size_t na = std::size_t{1} << n;
  lp.rows = na * nx;
  lp.coeff.assign(lp.rows * lp.cols(), 0);
  for (std::size_t xc = 0; xc < nx; ++xc) {
    std::vector<std::size_t> cls(std::size_t{1} << n);
    std::vector<std::uint32_t> outcome_mask(std::size_t{1} << n, 0);
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      cls[s] = lp.class_of(s, xc);
      for (int i = 0; i < n; ++i)
        if (s >> i & 1u) outcome_mask[s] |= 1u << (n - 1 - i);
    }
    for (std::size_t a = 0; a < na; ++a) {
      const std::size_t r = xc * na + a;
      for (std::uint32_t s = 1; s < (1u << n); ++s) {
        const int sign = std::popcount(static_cast<std::uint32_t>(a) & outcome_mask[s]) % 2 ? -1 : 1;
        lp.coeff[r * lp.cols() + cls[s]] += sign;
      }
    }
  }

  lp.objective.assign(lp.cols(), Rational(0));
  const int xs = lp.x;
  for (int a = 0; a < xs; ++a) {
    lp.objective[lp.index.at({1u, {a}})] += f.one[static_cast<std::size_t>(a)];
    for (int b = 0; b < xs; ++b) {
      lp.objective[lp.index.at({3u, {a, b}})] += f.nn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (f.scenario == Scenario::nnn2)
        lp.objective[lp.index.at({5u, {a, b}})] += f.nnn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
  }
  return lp;
}

struct LtiNsResult {
  Rational value;
  std::vector<Rational> correlators;  ///< optimal E per class
  std::vector<Rational> weights;      ///< dual multipliers per positivity row (certificate)
  bool certified_from_float = false;  ///< floating-point basis certified without exact pivots
  long pivots = 0;
};

namespace detail {

/// Exact check of a basis of the dual problem
///   minimize sum(lambda)  s.t.  M^T lambda = c,  lambda >= 0
/// whose value is minus the LP optimum.
inline std::optional<LtiNsResult> certify_basis(const LtiNsLP& lp, const std::vector<std::size_t>& basis) {
  const std::size_t k = lp.cols();
  if (basis.size() != k) return std::nullopt;
  std::vector<std::vector<Rational>> mb(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) mb[i][j] = lp.at(basis[i], j);
  std::optional<RationalLU> lu;
  try {
    lu.emplace(std::move(mb));
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  const std::vector<Rational> y = lu->solve(std::vector<Rational>(k, Rational(-1)));
  const std::vector<Rational> lam = lu->solve_transpose(lp.objective);
  for (const auto& l : lam)
    if (sgn(l) < 0) return std::nullopt;
  for (std::size_t r = 0; r < lp.rows; ++r) {
    Rational s = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (lp.at(r, j) != 0) s += lp.at(r, j) * y[j];
    if (s < -1) return std::nullopt;
  }
  LtiNsResult out;
  out.value = 0;
  for (std::size_t j = 0; j < k; ++j) out.value += lp.objective[j] * y[j];
  Rational dual = 0;
  for (const auto& l : lam) dual -= l;
  if (dual != out.value) return std::nullopt;
  out.correlators = y;
  out.weights.assign(lp.rows, Rational(0));
  for (std::size_t i = 0; i < k; ++i) out.weights[basis[i]] = lam[i];
  return out;
}

template <class T>
std::vector<std::vector<T>> dual_matrix(const LtiNsLP& lp) {
  std::vector<std::vector<T>> a(lp.cols(), std::vector<T>(lp.rows));
  for (std::size_t r = 0; r < lp.rows; ++r)
    for (std::size_t j = 0; j < lp.cols(); ++j) a[j][r] = T(lp.at(r, j));
  return a;
}

}  // namespace detail

/// Exact optimum. A floating-point simplex on the dual finds a candidate
/// basis that is then certified in rational arithmetic (primal and dual
/// feasibility, equal objectives); if certification fails the dual is solved
/// by the exact simplex with Bland's rule.
inline LtiNsResult solve_exact(const LtiNsLP& lp) {
  const std::size_t k = lp.cols();
  {
    std::vector<double> c(k);
    for (std::size_t j = 0; j < k; ++j) c[j] = to_double(lp.objective[j]);
    SimplexOptions o;
    o.bland = true;
    const auto fl = simplex(detail::dual_matrix<double>(lp), c, std::vector<double>(lp.rows, 1.0), o);
    if (fl.status == LPStatus::optimal) {
      if (auto cert = detail::certify_basis(lp, fl.basis)) {
        cert->certified_from_float = true;
        cert->pivots = fl.pivots;
        return *cert;
      }
    }
  }
  SimplexOptions o;
  o.bland = true;
  const auto ex = simplex(detail::dual_matrix<Rational>(lp), lp.objective, std::vector<Rational>(lp.rows, Rational(1)), o);
  if (ex.status != LPStatus::optimal) throw std::runtime_error("solve_exact: dual LP " + to_string(ex.status));
  auto cert = detail::certify_basis(lp, ex.basis);
  if (!cert) throw std::runtime_error("solve_exact: exact basis failed certification");
  cert->pivots = ex.pivots;
  return *cert;
}

/// Floating-point optimum only, for n beyond exact reach.
inline double solve_float(const LtiNsLP& lp) {
  std::vector<double> c(lp.cols());
  for (std::size_t j = 0; j < lp.cols(); ++j) c[j] = to_double(lp.objective[j]);
  SimplexOptions o;
  o.bland = true;
  const auto fl = simplex(detail::dual_matrix<double>(lp), c, std::vector<double>(lp.rows, 1.0), o);
  if (fl.status != LPStatus::optimal) throw std::runtime_error("solve_float: dual LP " + to_string(fl.status));
  return -fl.value;
}

inline Rational ltins_value(const BellFunctional& f, int n) { return solve_exact(build_ltins(f, n)).value; }

/// Probability table P(a|x) of the box with the given correlators, indexed
/// [x code][a] with site 0 the most significant digit of both codes.
inline std::vector<std::vector<Rational>> box_from_correlators(const LtiNsLP& lp, const std::vector<Rational>& y) {
  const int n = lp.n;
  const std::size_t nx = detail::ipow(static_cast<std::size_t>(lp.x), n), na = std::size_t{1} << n;
  std::vector<std::vector<Rational>> p(nx, std::vector<Rational>(na));
  const Rational scale(1, static_cast<unsigned long>(na));
  for (std::size_t xc = 0; xc < nx; ++xc)
    for (std::size_t a = 0; a < na; ++a) {
      Rational s = 1;
      for (std::size_t j = 0; j < lp.cols(); ++j)
        if (lp.at(xc * na + a, j) != 0) s += lp.at(xc * na + a, j) * y[j];
      p[xc][a] = s * scale;
    }
  return p;
}

// ---------------------------------------------------------------------------
// full probability table

/// LTI-NS_n over the full table P(a|x): (2 X)^n variables with normalization,
/// no-signalling and LTI equalities. Outcome bit of site i is bit (n-1-i) of a.
struct NSBoxLP {
  int n = 0, x = 0;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b, c;

  std::size_t var(std::size_t xcode, std::size_t a) const { return xcode * (std::size_t{1} << n) + a; }
};

inline NSBoxLP build_ns_box(const BellFunctional& f, int n) {
  f.validate();
  if (n < window_size(f.scenario)) throw std::invalid_argument("build_ns_box: n smaller than the window");
  if (n > 4) throw std::invalid_argument("build_ns_box: full tables are only supported up to n = 4");
  NSBoxLP lp;
  lp.n = n;
  lp.x = f.settings();
  const std::size_t nx = detail::ipow(static_cast<std::size_t>(lp.x), n), na = std::size_t{1} << n;
  const std::size_t nv = nx * na;
  auto outcome_bit = [&](std::size_t a, int i) { return static_cast<int>(a >> (n - 1 - i) & 1u); };
  auto with_setting = [&](std::size_t xc, int i, int s) {
    std::size_t p = detail::ipow(static_cast<std::size_t>(lp.x), n - 1 - i);
    const int cur = detail::setting_at(xc, i, n, lp.x);
    return xc + static_cast<std::size_t>(s - cur) * p;
  };
  auto add = [&](std::vector<Rational> row, Rational rhs) {
    lp.A.push_back(std::move(row));
    lp.b.push_back(rhs);
  };

  for (std::size_t xc = 0; xc < nx; ++xc) {
    std::vector<Rational> row(nv);
    for (std::size_t a = 0; a < na; ++a) row[lp.var(xc, a)] = 1;
    add(std::move(row), 1);
  }
  // no-signalling: the marginal without site i does not depend on its setting
  for (int i = 0; i < n; ++i)
    for (std::size_t xc = 0; xc < nx; ++xc) {
      if (detail::setting_at(xc, i, n, lp.x) != 0) continue;
      for (int s = 1; s < lp.x; ++s) {
        const std::size_t xo = with_setting(xc, i, s);
        for (std::size_t a = 0; a < na; ++a) {
          if (outcome_bit(a, i) != 0) continue;
          const std::size_t a1 = a | (std::size_t{1} << (n - 1 - i));
          std::vector<Rational> row(nv);
          row[lp.var(xc, a)] += 1, row[lp.var(xc, a1)] += 1;
          row[lp.var(xo, a)] -= 1, row[lp.var(xo, a1)] -= 1;
          add(std::move(row), 0);
        }
      }
    }
  // LTI: marginal on sites 0..n-2 equals marginal on sites 1..n-1
  const std::size_t nxm = detail::ipow(static_cast<std::size_t>(lp.x), n - 1), nam = na / 2;
  for (std::size_t xm = 0; xm < nxm; ++xm)
    for (std::size_t am = 0; am < nam; ++am) {
      std::vector<Rational> row(nv);
      for (std::size_t last = 0; last < 2; ++last) row[lp.var(xm * static_cast<std::size_t>(lp.x), am * 2 + last)] += 1;
      for (std::size_t first = 0; first < 2; ++first) row[lp.var(xm, first * nam + am)] -= 1;
      add(std::move(row), 0);
    }

  lp.c.assign(nv, Rational(0));
  auto correlate = [&](const std::vector<std::pair<int, int>>& site_settings, const Rational& j) {
    if (sgn(j) == 0) return;
    std::size_t xc = 0;
    for (const auto& [i, s] : site_settings) xc = with_setting(xc, i, s);
    for (std::size_t a = 0; a < na; ++a) {
      int parity = 0;
      for (const auto& [i, s] : site_settings) parity ^= outcome_bit(a, i);
      lp.c[lp.var(xc, a)] += parity ? -j : j;
    }
  };
  for (int a = 0; a < lp.x; ++a) {
    correlate({{0, a}}, f.one[static_cast<std::size_t>(a)]);
    for (int b = 0; b < lp.x; ++b) {
      correlate({{0, a}, {1, b}}, f.nn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
      if (f.scenario == Scenario::nnn2)
        correlate({{0, a}, {2, b}}, f.nnn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    }
  }
  return lp;
}

inline LPSolution<Rational> solve_exact(const NSBoxLP& lp) {
  SimplexOptions o;
  o.bland = true;
  auto s = simplex(lp.A, lp.b, lp.c, o);
  if (s.status != LPStatus::optimal) throw std::runtime_error("solve_exact: " + to_string(s.status));
  return s;
}

// ---------------------------------------------------------------------------
// the closed form fitted to the 222 sequence

struct FitResidual {
  int n = 0;
  Rational value, fit, residual;
  bool exact = false;
};

/// -2 - 4 / (n^2 - 3n + 6)
inline Rational fitted_value(int n) {
  Rational q(4, static_cast<unsigned long>(n * n - 3 * n + 6));
  q.canonicalize();
  return -2 - q;
}

inline std::vector<FitResidual> fitted_sequence_check(const std::map<int, Rational>& values) {
  std::vector<FitResidual> out;
  for (const auto& [n, v] : values) {
    if (n < 3) throw std::invalid_argument("fitted_sequence_check: n must be >= 3");
    FitResidual r{n, v, fitted_value(n), v - fitted_value(n), false};
    r.exact = sgn(r.residual) == 0;
    out.push_back(r);
  }
  return out;
}

}  // namespace ticontext
