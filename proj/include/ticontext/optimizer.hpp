#pragma once

// Outer loop over observable parameters: alternate uMPS ground-state solves
// with gradient steps on the parameters, a projected-gradient variant over
// qubit POVMs, and energy-surface scans.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ticontext/classical.hpp"
#include "ticontext/functionals.hpp"
#include "ticontext/observables.hpp"
#include "ticontext/parallel.hpp"
#include "ticontext/umps.hpp"

namespace ticontext {

// ---------------------------------------------------------------------------
// schedule and traces

struct Schedule {
  double gamma0 = 0.5;
  double alpha = 0.9;
  double slope = 1.0;  ///< q(k) = slope * k
  double gamma_min = 1e-3;
  double tol = 1e-4;   ///< gradient norm (descend) or energy change (povm_descend)
  int max_iter = 200;
  double momentum = 0.9;

  double gamma(int k) const { return std::max(gamma0 * std::pow(alpha, slope * k), gamma_min); }

  void validate() const {
    if (!(gamma0 > 0)) throw std::invalid_argument("schedule: gamma0 must be positive");
    if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("schedule: alpha must lie in (0,1)");
    if (!(slope >= 0)) throw std::invalid_argument("schedule: slope of q(k) must be non-negative");
    if (!(gamma_min > 0)) throw std::invalid_argument("schedule: gamma_min must be positive");
    if (!(tol > 0)) throw std::invalid_argument("schedule: convergence threshold must be positive");
    if (max_iter < 1) throw std::invalid_argument("schedule: max_iter must be >= 1");
    if (!(momentum >= 0 && momentum < 1)) throw std::invalid_argument("schedule: momentum must lie in [0,1)");
  }
};

enum class RunStatus { converged, max_iter };

inline std::string to_string(RunStatus s) { return s == RunStatus::converged ? "converged" : "max-iter"; }

struct TraceRow {
  int k = 0;
  std::vector<double> w;
  double e = 0;
  double grad_norm = 0;
  bool inner_converged = true;
};

struct Trace {
  std::vector<TraceRow> rows;
  RunStatus status = RunStatus::max_iter;
};

// ---------------------------------------------------------------------------
// energy as a function of the observables at a fixed state

/// Site-level reduced density seen by the local term: rho_2 for two-site
/// scenarios; for 322 the average of the two three-site windows inside an
/// engine block (the engine chain groups sites in pairs).
inline CMat window_density(const BellFunctional& f, const CMat& engine_rho2, Eigen::Index d) {
  if (f.scenario != Scenario::nnn2) return engine_rho2;
  return 0.5 * (trace_right(engine_rho2, d * d * d, d) + trace_left(engine_rho2, d, d * d * d));
}

inline CMat window_density(const BellFunctional& f, const SiteTensor& A, Eigen::Index d) {
  return window_density(f, reduced_density(A, 2), d);
}

inline double trace_product(const CMat& h, const CMat& rho) { return h.cwiseProduct(rho.transpose()).sum().real(); }

/// e(W) for the observables produced by `ansatz` at `w` on the fixed state A
/// (an engine tensor: physical dimension d, or d^2 for 322).
inline double energy_of_params(const BellFunctional& f, const Ansatz& ansatz, std::span<const double> w,
                               const SiteTensor& A) {
  const auto obs = ansatz.observables(w);
  return trace_product(local_term(f, obs), window_density(f, A, ansatz.dim()));
}

/// de/dsigma_a for every observable: matrices G_a with de = tr(G_a dsigma_a).
/// The local term is at most quadratic in each observable, so a unit central
/// difference of h along a matrix unit is exact.
inline std::vector<CMat> effective_operators(const BellFunctional& f, const std::vector<CMat>& obs, const CMat& rho) {
  const Eigen::Index d = obs.front().rows();
  std::vector<CMat> out;
  for (std::size_t a = 0; a < obs.size(); ++a) {
    CMat g(d, d);
    for (Eigen::Index p = 0; p < d; ++p)
      for (Eigen::Index q = 0; q < d; ++q) {
        auto plus = obs, minus = obs;
        plus[a](p, q) += 1.0;
        minus[a](p, q) -= 1.0;
        const CMat dh = 0.5 * (local_term(f, plus) - local_term(f, minus));
        g(q, p) = dh.cwiseProduct(rho.transpose()).sum();
      }
    out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<double> gradient_from_density(const BellFunctional& f, const Ansatz& ansatz,
                                                 std::span<const double> w, const CMat& rho) {
  const auto g = effective_operators(f, ansatz.observables(w), rho);
  std::vector<double> out;
  for (const auto& [a, ds] : ansatz.derivatives(w)) out.push_back((g[a] * ds).trace().real());
  return out;
}

/// Analytic gradient of energy_of_params with respect to w.
inline std::vector<double> gradient(const BellFunctional& f, const Ansatz& ansatz, std::span<const double> w,
                                    const SiteTensor& A) {
  return gradient_from_density(f, ansatz, w, window_density(f, A, ansatz.dim()));
}

/// Central finite differences of energy_of_params.
inline std::vector<double> gradient_fd(const BellFunctional& f, const Ansatz& ansatz, std::span<const double> w,
                                       const SiteTensor& A, double step = 1e-5) {
  const CMat rho = window_density(f, A, ansatz.dim());
  std::vector<double> x(w.begin(), w.end()), out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double x0 = x[i];
    x[i] = x0 + step;
    const double ep = trace_product(local_term(f, ansatz.observables(x)), rho);
    x[i] = x0 - step;
    const double em = trace_product(local_term(f, ansatz.observables(x)), rho);
    x[i] = x0;
    out.push_back((ep - em) / (2 * step));
  }
  return out;
}

inline double norm2(std::span<const double> v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// gradient descent over observable parameters

struct DescentOptions {
  Eigen::Index bond = 5;
  Schedule schedule;
  GroundStateOptions inner{1e-8, 2000, 1, false};
  std::vector<double> w0;  ///< starting parameters; drawn from the seed when empty
};

struct DescentResult {
  std::vector<double> w;
  double e = std::numeric_limits<double>::infinity();
  GroundState state;
  Trace trace;
  std::uint64_t seed = 0;
  std::string ansatz;
};

inline std::vector<double> random_parameters(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-M_PI, M_PI);
  std::vector<double> w(n);
  for (auto& x : w) x = u(rng);
  return w;
}

namespace detail {

/// Engine-chain ground state for the observables `obs`, warm-started from
/// `warm` when given. Non-injective iterates are restarted from fresh tensors.
inline GroundState engine_ground_state(const BellFunctional& f, const std::vector<CMat>& obs, Eigen::Index D,
                                       GroundStateOptions inner, const MixedGauge* warm) {
  const EngineTerm term = engine_term(f, obs);
  if (warm) {
    try {
      return ground_state_from(term.h, *warm, inner);
    } catch (const NonInjectiveError&) {
    }
  }
  return ground_state(term.h, D, inner);
}

}  // namespace detail

/// W(k+1) = W(k) - gamma(k) grad e(W; k), with the ground state re-solved
/// (warm-started) after each update. Stops when |grad| < schedule.tol;
/// otherwise returns the best iterate seen.
inline DescentResult descend(const BellFunctional& f, const Ansatz& ansatz, std::uint64_t seed,
                             const DescentOptions& opts = {}) {
  opts.schedule.validate();
  const Eigen::Index d = ansatz.dim();
  if (static_cast<int>(ansatz.families.size()) != f.settings())
    throw std::invalid_argument("descend: ansatz has " + std::to_string(ansatz.families.size()) +
                                " observables, functional needs " + std::to_string(f.settings()));
  std::vector<double> w = opts.w0.empty() ? random_parameters(ansatz.parameter_count(), seed) : opts.w0;
  if (w.size() != ansatz.parameter_count()) throw std::invalid_argument("descend: w0 has the wrong length");

  GroundStateOptions inner = opts.inner;
  inner.seed = seed;
  const double scale = f.scenario == Scenario::nnn2 ? 0.5 : 1.0;

  DescentResult best;
  best.seed = seed;
  best.ansatz = ansatz.label;
  Trace trace;
  std::optional<MixedGauge> warm;
  for (int k = 0; k < opts.schedule.max_iter; ++k) {
    const auto obs = ansatz.observables(w);
    GroundState gs = detail::engine_ground_state(f, obs, opts.bond, inner, warm ? &*warm : nullptr);
    const double e = gs.report.energy * scale;
    const CMat rho = window_density(f, two_site_density(gs.state), d);
    const auto g = gradient_from_density(f, ansatz, w, rho);
    const double gn = norm2(g);
    trace.rows.push_back({k, w, e, gn, gs.report.converged});
    if (e < best.e) {
      best.w = w;
      best.e = e;
      best.state = gs;
    }
    warm = gs.state;
    if (gn < opts.schedule.tol) {
      trace.status = RunStatus::converged;
      best.w = w;
      best.e = e;
      best.state = std::move(gs);
      break;
    }
    const double gamma = opts.schedule.gamma(k);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= gamma * g[i];
  }
  best.trace = std::move(trace);
  return best;
}

/// Independent descents from seeds base_seed, base_seed+1, ... run
/// concurrently; results are in seed order.
inline std::vector<DescentResult> multi_start(const BellFunctional& f, const Ansatz& ansatz, int starts,
                                              std::uint64_t base_seed = 1, const DescentOptions& opts = {},
                                              int workers = worker_count()) {
  if (starts < 1) throw std::invalid_argument("multi_start: need at least one start");
  std::vector<DescentResult> out(static_cast<std::size_t>(starts));
  parallel_for(
      out.size(), [&](std::size_t i) { out[i] = descend(f, ansatz, base_seed + i, opts); }, workers);
  return out;
}

inline const DescentResult& best_of(const std::vector<DescentResult>& runs) {
  if (runs.empty()) throw std::invalid_argument("best_of: no runs");
  return *std::min_element(runs.begin(), runs.end(), [](const auto& a, const auto& b) { return a.e < b.e; });
}

// ---------------------------------------------------------------------------
// qubit POVMs

struct PovmPair {
  CMat sigma, m0, m1;
};

/// Frobenius-nearest Hermitian matrix with spectrum in [-1, 1] (eigenvalue
/// clipping) and its two effects.
inline PovmPair povm_project(const CMat& s) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(s));
  const RVec ev = es.eigenvalues().cwiseMax(-1.0).cwiseMin(1.0);
  PovmPair p;
  p.sigma = hermitian_part(es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint());
  const CMat id = identity(s.rows());
  p.m0 = 0.5 * (id + p.sigma);
  p.m1 = 0.5 * (id - p.sigma);
  return p;
}

/// Conjugates the observables by one unitary so that their Bloch vectors lie
/// in the x-z plane when they are coplanar (the energy is unchanged).
inline std::vector<CMat> real_gauge(const std::vector<CMat>& obs) {
  const CMat sx = (CMat(2, 2) << 0, 1, 1, 0).finished();
  const CMat sy = (CMat(2, 2) << 0, cplx(0, -1), cplx(0, 1), 0).finished();
  const CMat sz = (CMat(2, 2) << 1, 0, 0, -1).finished();
  RMat r(3, obs.size());
  for (std::size_t a = 0; a < obs.size(); ++a) {
    r(0, a) = 0.5 * (sx * obs[a]).trace().real();
    r(1, a) = 0.5 * (sy * obs[a]).trace().real();
    r(2, a) = 0.5 * (sz * obs[a]).trace().real();
  }
  Eigen::JacobiSVD<RMat> svd(r, Eigen::ComputeFullU);
  Eigen::Vector3d n = svd.matrixU().col(2);
  // rotation taking n to +y, realized on C^2
  const Eigen::Vector3d y(0, 1, 0);
  Eigen::Vector3d axis = n.cross(y);
  const double s = axis.norm(), c = n.dot(y);
  CMat u = identity(2);
  if (s > 1e-15) {
    axis /= s;
    const double angle = std::atan2(s, c);
    const CMat gen = axis(0) * sx + axis(1) * sy + axis(2) * sz;
    u = std::cos(angle / 2) * identity(2) - cplx(0, 1) * std::sin(angle / 2) * gen;
  } else if (c < 0) {
    u = -cplx(0, 1) * sz;  // n = -y: rotate by pi about z
  }
  std::vector<CMat> out;
  for (const auto& o : obs) out.push_back(hermitian_part(u * o * u.adjoint()));
  return out;
}

inline double max_imag(const std::vector<CMat>& obs) {
  double m = 0;
  for (const auto& o : obs) m = std::max(m, o.imag().cwiseAbs().maxCoeff());
  return m;
}

struct PovmOptions {
  Eigen::Index bond = 2;
  Schedule schedule{0.5, 0.9, 1.0, 1e-2, 1e-12, 20000, 0.9};
  double stationarity = 1e-10;  ///< also required: |sigma - P(sigma - grad)| below this
  GroundStateOptions inner{1e-9, 2000, 1, false};
  int restarts = 10;
  double stall_margin = 1e-5;  ///< restart when the run ends above L by more than this
};

struct PovmResult {
  std::vector<CMat> sigma;  ///< in the real gauge when one exists
  double e = std::numeric_limits<double>::infinity();
  double max_imag = 0;
  int attempts = 0;
  bool reached_bound = false;
  std::uint64_t seed = 0;
  Trace trace;  ///< of the returned attempt; w holds the real and imaginary parts of all entries
};

namespace detail {

inline std::vector<double> flatten_params(const std::vector<CMat>& obs) {
  std::vector<double> w;
  for (const auto& o : obs)
    for (Eigen::Index j = 0; j < o.cols(); ++j)
      for (Eigen::Index i = 0; i < o.rows(); ++i) {
        w.push_back(o(i, j).real());
        w.push_back(o(i, j).imag());
      }
  return w;
}

inline std::vector<CMat> random_povm_observables(int count, std::mt19937_64& rng) {
  std::vector<CMat> obs;
  for (int a = 0; a < count; ++a) obs.push_back(povm_project(random_hermitian(2, rng)).sigma);
  return obs;
}

}  // namespace detail

/// Projected gradient descent with momentum over qubit POVM observables:
/// V <- eta V - gamma(k) grad, sigma <- P(sigma + V). An attempt stops when
/// |e(k+1) - e(k)| <= schedule.tol; attempts that end above the classical
/// bound restart from fresh random complex observables.
inline PovmResult povm_descend(const BellFunctional& f, std::uint64_t seed, const PovmOptions& opts = {}) {
  opts.schedule.validate();
  const int x = f.settings();
  const double bound = to_double(classical_bound(f));
  const double scale = f.scenario == Scenario::nnn2 ? 0.5 : 1.0;
  PovmResult best;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
    auto obs = detail::random_povm_observables(x, rng);
    std::vector<CMat> vel(static_cast<std::size_t>(x), CMat::Zero(2, 2));
    GroundStateOptions inner = opts.inner;
    inner.seed = seed + static_cast<std::uint64_t>(attempt);
    Trace trace;
    std::optional<MixedGauge> warm;
    double prev = std::numeric_limits<double>::infinity(), e = prev;
    std::vector<CMat> at = obs;
    for (int k = 0; k < opts.schedule.max_iter; ++k) {
      GroundState gs = detail::engine_ground_state(f, obs, opts.bond, inner, warm ? &*warm : nullptr);
      e = gs.report.energy * scale;
      warm = gs.state;
      const CMat rho = window_density(f, two_site_density(gs.state), 2);
      const auto g = effective_operators(f, obs, rho);
      double gn = 0, station = 0;
      for (int a = 0; a < x; ++a) {
        gn += g[a].squaredNorm();
        station += (obs[a] - povm_project(obs[a] - hermitian_part(g[a])).sigma).squaredNorm();
      }
      trace.rows.push_back({k, detail::flatten_params(obs), e, std::sqrt(gn), gs.report.converged});
      at = obs;
      if (std::abs(e - prev) <= opts.schedule.tol && std::sqrt(station) <= opts.stationarity) {
        trace.status = RunStatus::converged;
        break;
      }
      prev = e;
      const double gamma = opts.schedule.gamma(k);
      for (int a = 0; a < x; ++a) {
        vel[a] = opts.schedule.momentum * vel[a] - gamma * hermitian_part(g[a]);
        obs[a] = povm_project(obs[a] + vel[a]).sigma;
      }
    }
    if (attempt == 0 || e < best.e) {
      best.sigma = real_gauge(at);
      best.e = e;
      best.max_imag = max_imag(best.sigma);
      best.seed = seed;
      best.trace = std::move(trace);
    }
    best.attempts = attempt + 1;
    best.reached_bound = best.e <= bound + opts.stall_margin;
    if (best.reached_bound) break;
  }
  return best;
}

// ---------------------------------------------------------------------------
// energy surfaces

struct Surface {
  std::vector<double> w1, w2;
  RMat e;  ///< e(i, j) at (w1[i], w2[j])
};

inline std::vector<double> grid_axis(double lo, double hi, double step) {
  if (!(step > 0) || hi < lo) throw std::invalid_argument("grid_axis: need lo <= hi and step > 0");
  std::vector<double> v;
  const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= n; ++i) v.push_back(lo + i * step);
  return v;
}

/// Ground-state energy density on a grid of the two parameters of `ansatz`.
/// Rows are scanned in snake order so each solve is warm-started from a
/// neighbouring grid point.
inline Surface scan_surface(const BellFunctional& f, const Ansatz& ansatz, const std::vector<double>& w1,
                            const std::vector<double>& w2, Eigen::Index bond = 5,
                            GroundStateOptions inner = {1e-8, 2000, 1, false}) {
  if (ansatz.parameter_count() != 2)
    throw std::invalid_argument("scan_surface: ansatz must have exactly two parameters, has " +
                                std::to_string(ansatz.parameter_count()));
  const double scale = f.scenario == Scenario::nnn2 ? 0.5 : 1.0;
  Surface s{w1, w2, RMat(static_cast<Eigen::Index>(w1.size()), static_cast<Eigen::Index>(w2.size()))};
  std::optional<MixedGauge> warm;
  for (std::size_t i = 0; i < w1.size(); ++i)
    for (std::size_t jj = 0; jj < w2.size(); ++jj) {
      const std::size_t j = i % 2 == 0 ? jj : w2.size() - 1 - jj;
      const double w[2] = {w1[i], w2[j]};
      GroundState gs = detail::engine_ground_state(f, ansatz.observables(w), bond, inner, warm ? &*warm : nullptr);
      warm = gs.state;
      s.e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = gs.report.energy * scale;
    }
  return s;
}

}  // namespace ticontext
