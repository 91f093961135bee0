#pragma once

// LTI-NPA_{n,1}: moment-matrix relaxation of the quantum set on n sites with
// local translation invariance imposed on the moments. Observables are
// dichotomic (sigma^2 = I), operators on different sites commute.
//
// Monomials carry at most one operator per site. The local level takes every
// such product over the n sites ((1+X)^n monomials); the standard level keeps
// only the identity and the single operators (1 + nX).

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ticontext/functionals.hpp"
#include "ticontext/sdp.hpp"

namespace ticontext {

enum class NpaLevel { local, standard };

inline std::string to_string(NpaLevel l) { return l == NpaLevel::local ? "local" : "standard"; }

inline NpaLevel parse_npa_level(const std::string& s) {
  if (s == "local") return NpaLevel::local;
  if (s == "standard") return NpaLevel::standard;
  throw std::invalid_argument("unknown NPA level '" + s + "' (local|standard)");
}

/// Per-site operator word after reduction: 0 identity, 1..X a single sigma_a,
/// X+1+a*X+b the product sigma_a sigma_b (a != b).
using MomentKey = std::vector<int>;

struct MonomialIndex {
  int n = 0, x = 0;
  std::vector<std::vector<int>> monomials;  ///< per site: 0 identity, a+1 for sigma_a
  std::map<MomentKey, int> classes;         ///< moment key -> class (class 0 is the identity)

  int word(int a, int b) const {  // sigma_a^dag sigma_b on one site, 0-based settings or -1
    if (a < 0 && b < 0) return 0;
    if (a < 0) return b + 1;
    if (b < 0) return a + 1;
    if (a == b) return 0;
    return x + 1 + a * x + b;
  }
  int reversed(int w) const {
    if (w <= x) return w;
    const int a = (w - x - 1) / x, b = (w - x - 1) % x;
    return x + 1 + b * x + a;
  }
  /// Canonical key: trimmed of identity sites (translation) and identified with its conjugate.
  MomentKey canonical(const std::vector<int>& words) const {
    auto lo = std::find_if(words.begin(), words.end(), [](int w) { return w != 0; });
    if (lo == words.end()) return {};
    auto hi = std::find_if(words.rbegin(), words.rend(), [](int w) { return w != 0; }).base();
    MomentKey k(lo, hi), kc(k.size());
    std::transform(k.begin(), k.end(), kc.begin(), [this](int w) { return reversed(w); });
    return std::min(k, kc);
  }
};

struct LtiNpaSDP {
  BellFunctional functional;
  int n = 0;
  NpaLevel level = NpaLevel::local;
  MonomialIndex index;
  MomentProblem problem;

  int size() const { return problem.size; }
  int variables() const { return problem.classes - 1; }
};

inline LtiNpaSDP build_ltinpa(const BellFunctional& f, int n, int s = 1, NpaLevel level = NpaLevel::local) {
  f.validate();
  if (s != 1) throw std::invalid_argument("build_ltinpa: only s = 1 is supported");
  if (n < window_size(f.scenario)) throw std::invalid_argument("build_ltinpa: n must be at least the window size " + std::to_string(window_size(f.scenario)));
  LtiNpaSDP sdp;
  sdp.functional = f;
  sdp.n = n;
  sdp.level = level;
  auto& ix = sdp.index;
  ix.n = n;
  ix.x = f.settings();

  if (level == NpaLevel::local) {
    std::vector<int> mono(static_cast<std::size_t>(n), 0);
    for (;;) {
      ix.monomials.push_back(mono);
      int i = n - 1;
      while (i >= 0 && mono[static_cast<std::size_t>(i)] == ix.x) mono[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++mono[static_cast<std::size_t>(i)];
    }
    if (ix.monomials.size() > 4096) throw std::invalid_argument("build_ltinpa: moment matrix too large");
  } else {
    ix.monomials.emplace_back(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int a = 1; a <= ix.x; ++a) {
        std::vector<int> mono(static_cast<std::size_t>(n), 0);
        mono[static_cast<std::size_t>(i)] = a;
        ix.monomials.push_back(std::move(mono));
      }
  }

  const int m = static_cast<int>(ix.monomials.size());
  auto& pr = sdp.problem;
  pr.size = m;
  pr.cls.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  ix.classes[{}] = 0;
  std::vector<int> words(static_cast<std::size_t>(n));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      for (int i = 0; i < n; ++i)
        words[static_cast<std::size_t>(i)] = ix.word(ix.monomials[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] - 1,
                                                     ix.monomials[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)] - 1);
      const auto key = ix.canonical(words);
      auto [it, fresh] = ix.classes.emplace(key, static_cast<int>(ix.classes.size()));
      pr.cls[static_cast<std::size_t>(p) * static_cast<std::size_t>(m) + static_cast<std::size_t>(q)] = it->second;
    }
  pr.classes = static_cast<int>(ix.classes.size());
  pr.cost.assign(static_cast<std::size_t>(pr.classes), 0.0);

  auto moment = [&](std::vector<int> w) {
    const auto it = ix.classes.find(ix.canonical(w));
    if (it == ix.classes.end()) throw std::logic_error("build_ltinpa: window moment missing from the moment matrix");
    return static_cast<std::size_t>(it->second);
  };
  for (int a = 0; a < ix.x; ++a) {
    pr.cost[moment({a + 1})] += to_double(f.one[static_cast<std::size_t>(a)]);
    for (int b = 0; b < ix.x; ++b) {
      pr.cost[moment({a + 1, b + 1})] += to_double(f.nn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
      if (f.scenario == Scenario::nnn2)
        pr.cost[moment({a + 1, 0, b + 1})] += to_double(f.nnn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    }
  }
  return sdp;
}

inline SdpResult solve_sdp(const LtiNpaSDP& sdp, double tol = 1e-8, int workers = 1) {
  SdpOptions o;
  o.tol = tol;
  o.workers = workers;
  return solve_moment_sdp(sdp.problem, o);
}

}  // namespace ticontext
