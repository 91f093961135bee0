#pragma once

// Exact classical bound over translation-invariant deterministic strategies.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "ticontext/functionals.hpp"
#include "ticontext/rational.hpp"

namespace ticontext {

/// Deterministic site assignments are bit masks: bit a set means s_a = -1.
inline int assignment_value(unsigned mask, int a) { return (mask >> a) & 1u ? -1 : 1; }

struct StrategyGraph {
  int nodes = 0;
  std::vector<std::vector<Rational>> weight;
  std::vector<std::vector<bool>> allowed;
};

namespace detail {

inline Rational one_body_value(const BellFunctional& f, unsigned s) {
  Rational v = 0;
  for (int a = 0; a < f.settings(); ++a) v += f.one[static_cast<std::size_t>(a)] * assignment_value(s, a);
  return v;
}

inline Rational pair_value(const std::vector<std::vector<Rational>>& j, int x, unsigned s, unsigned t) {
  Rational v = 0;
  for (int a = 0; a < x; ++a)
    for (int b = 0; b < x; ++b)
      v += j[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * (assignment_value(s, a) * assignment_value(t, b));
  return v;
}

}  // namespace detail

/// 222/232: nodes are single-site assignments. 322: nodes are (s_i, s_{i+1})
/// pairs encoded as s_i * 2^X + s_{i+1}; only (s1,s2) -> (s2,s3) edges exist.
inline StrategyGraph strategy_graph(const BellFunctional& f) {
  f.validate();
  const int x = f.settings();
  const unsigned q = 1u << x;
  StrategyGraph g;
  if (f.scenario != Scenario::nnn2) {
    g.nodes = static_cast<int>(q);
    g.weight.assign(q, std::vector<Rational>(q));
    g.allowed.assign(q, std::vector<bool>(q, true));
    for (unsigned s = 0; s < q; ++s)
      for (unsigned t = 0; t < q; ++t) g.weight[s][t] = detail::one_body_value(f, s) + detail::pair_value(f.nn, x, s, t);
    return g;
  }
  g.nodes = static_cast<int>(q * q);
  g.weight.assign(q * q, std::vector<Rational>(q * q));
  g.allowed.assign(q * q, std::vector<bool>(q * q, false));
  for (unsigned s1 = 0; s1 < q; ++s1)
    for (unsigned s2 = 0; s2 < q; ++s2)
      for (unsigned s3 = 0; s3 < q; ++s3) {
        const unsigned from = s1 * q + s2, to = s2 * q + s3;
        g.allowed[from][to] = true;
        g.weight[from][to] = detail::one_body_value(f, s1) + detail::pair_value(f.nn, x, s1, s2) +
                             detail::pair_value(f.nnn, x, s1, s3);
      }
  return g;
}

/// Karp's minimum mean cycle, exact.
inline Rational minimum_mean_cycle(const StrategyGraph& g) {
  const int n = g.nodes;
  // dist[k][v]: minimum weight of a k-edge walk ending at v, from any start.
  std::vector<std::vector<std::optional<Rational>>> dist(static_cast<std::size_t>(n) + 1,
                                                         std::vector<std::optional<Rational>>(static_cast<std::size_t>(n)));
  for (auto& v : dist[0]) v = Rational(0);
  for (int k = 1; k <= n; ++k)
    for (int u = 0; u < n; ++u) {
      if (!dist[k - 1][u]) continue;
      for (int v = 0; v < n; ++v) {
        if (!g.allowed[u][v]) continue;
        Rational c = *dist[k - 1][u] + g.weight[u][v];
        auto& slot = dist[k][v];
        if (!slot || c < *slot) slot = std::move(c);
      }
    }
  std::optional<Rational> best;
  for (int v = 0; v < n; ++v) {
    if (!dist[n][v]) continue;
    std::optional<Rational> worst;
    for (int k = 0; k < n; ++k) {
      if (!dist[k][v]) continue;
      Rational m = (*dist[n][v] - *dist[k][v]) / Rational(n - k);
      if (!worst || m > *worst) worst = m;
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  return best.value_or(Rational(0));
}

inline Rational classical_bound(const BellFunctional& f) { return minimum_mean_cycle(strategy_graph(f)); }

/// Minimum energy density over deterministic configurations of period <= p_max,
/// by direct enumeration of periodic site assignments.
inline Rational brute_force_periodic(const BellFunctional& f, int p_max) {
  if (p_max < 1) throw std::invalid_argument("brute_force_periodic: period must be >= 1");
  f.validate();
  const int x = f.settings();
  const unsigned q = 1u << x;
  std::optional<Rational> best;
  std::vector<unsigned> cfg;
  for (int p = 1; p <= p_max; ++p) {
    cfg.assign(static_cast<std::size_t>(p), 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == p) {
        Rational total = 0;
        for (int i = 0; i < p; ++i) {
          const unsigned s = cfg[i], t = cfg[(i + 1) % p], u = cfg[(i + 2) % p];
          total += detail::one_body_value(f, s) + detail::pair_value(f.nn, x, s, t);
          if (f.scenario == Scenario::nnn2) total += detail::pair_value(f.nnn, x, s, u);
        }
        total /= p;
        if (!best || total < *best) best = total;
        return;
      }
      for (unsigned s = 0; s < q; ++s) {
        cfg[pos] = s;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  return *best;
}

}  // namespace ticontext
