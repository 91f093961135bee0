#pragma once

// Uniform matrix product states: transfer-matrix fixed points, energy
// densities of nearest-neighbour terms, and a variational ground-state
// search (VUMPS fixed-point iteration in the mixed canonical gauge).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ticontext/krylov.hpp"
#include "ticontext/linalg.hpp"

namespace ticontext {

/// Site tensor A^s (s = 0..d-1), each D x D.
using SiteTensor = std::vector<CMat>;

struct UMPS {
  SiteTensor A;
  std::uint64_t seed = 0;

  Eigen::Index phys() const { return static_cast<Eigen::Index>(A.size()); }
  Eigen::Index bond() const { return A.empty() ? 0 : A.front().rows(); }
};

class NonInjectiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixedPoints {
  CMat l, r;
  double lambda = 0;  ///< leading eigenvalue of the transfer matrix before rescaling
  double gap = 0;     ///< 1 - |second| / |leading|
};

inline UMPS random_umps(Eigen::Index d, Eigen::Index D, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  UMPS m;
  m.seed = seed;
  for (Eigen::Index s = 0; s < d; ++s) m.A.push_back(random_complex(D, D, rng));
  return m;
}

namespace detail {

inline CVec vec(const CMat& m) { return Eigen::Map<const CVec>(m.data(), m.size()); }
inline CMat unvec(const CVec& v, Eigen::Index D) { return Eigen::Map<const CMat>(v.data(), D, D); }

/// Fixes the phase so that tr(m) is real positive and symmetrizes.
inline CMat hermitian_normalized(CMat m) {
  const cplx t = m.trace();
  if (std::abs(t) > 0) m *= std::conj(t) / std::abs(t);
  return hermitian_part(m);
}

}  // namespace detail

/// X -> sum_s A^s X A^s^dagger
inline CMat transfer_right(const SiteTensor& A, const CMat& x) {
  CMat out = CMat::Zero(x.rows(), x.cols());
  for (const auto& a : A) out.noalias() += a * x * a.adjoint();
  return out;
}

/// X -> sum_s A^s^dagger X A^s
inline CMat transfer_left(const SiteTensor& A, const CMat& x) {
  CMat out = CMat::Zero(x.rows(), x.cols());
  for (const auto& a : A) out.noalias() += a.adjoint() * x * a;
  return out;
}

/// Dense D^2 x D^2 transfer matrix acting on column-major vec(X), right action.
inline CMat transfer_matrix_dense(const SiteTensor& A) {
  const Eigen::Index D = A.front().rows();
  CMat t = CMat::Zero(D * D, D * D);
  for (const auto& a : A) t += kron(a.conjugate(), a);
  return t;
}

/// Leading left/right eigenvectors of the transfer matrix. Returns lambda of
/// the unscaled tensor; l, r are Hermitian PSD with tr(l r) = 1.
inline FixedPoints fixed_points(const SiteTensor& A, double tol = 1e-12) {
  if (A.empty()) throw std::invalid_argument("fixed_points: empty tensor");
  const Eigen::Index D = A.front().rows();
  double anorm = 0;
  for (const auto& a : A) anorm += a.squaredNorm();
  if (anorm == 0) throw std::invalid_argument("fixed_points: zero tensor");
  // generic start vector so that no invariant sector is missed
  std::mt19937_64 rng(0x5eed);
  const CVec x0 = detail::vec(identity(D)) + 0.1 * random_complex(D * D, 1, rng);
  auto right = arnoldi_dominant([&](const CVec& v) { return detail::vec(transfer_right(A, detail::unvec(v, D))); }, x0, tol);
  auto left = arnoldi_dominant([&](const CVec& v) { return detail::vec(transfer_left(A, detail::unvec(v, D))); }, x0, tol);
  FixedPoints fp;
  fp.lambda = std::abs(right.value);
  fp.r = detail::hermitian_normalized(detail::unvec(right.vector, D));
  fp.l = detail::hermitian_normalized(detail::unvec(left.vector, D));
  const double overlap = (fp.l * fp.r).trace().real();
  fp.l /= std::sqrt(overlap);
  fp.r /= std::sqrt(overlap);
  // second eigenvalue from the deflated map, which also sees multiplicities
  if (D == 1) {
    fp.gap = 1.0;
  } else {
    const CVec y0 = random_complex(D * D, 1, rng);
    const auto second = arnoldi_dominant(
        [&](const CVec& v) {
          const CMat x = detail::unvec(v, D);
          return detail::vec(transfer_right(A, x) - fp.lambda * (fp.l * x).trace() * fp.r);
        },
        y0, 1e-8);
    fp.gap = 1.0 - std::abs(second.value) / fp.lambda;
  }
  if (fp.gap < 1e-10) throw NonInjectiveError("transfer matrix has a degenerate leading eigenvalue (non-injective MPS)");
  return fp;
}

/// Rescales A so that the leading transfer eigenvalue is one.
inline SiteTensor normalized(const SiteTensor& A, const FixedPoints& fp) {
  SiteTensor out = A;
  for (auto& a : out) a /= std::sqrt(fp.lambda);
  return out;
}

namespace detail {

/// All products A^{s1} ... A^{sk} in lexicographic (s1 slowest) order.
inline std::vector<CMat> window_products(const SiteTensor& A, int k) {
  std::vector<CMat> cur{identity(A.front().rows())};
  for (int i = 0; i < k; ++i) {
    std::vector<CMat> next;
    next.reserve(cur.size() * A.size());
    for (const auto& c : cur)
      for (const auto& a : A) next.push_back(c * a);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

/// rho_k on d^k: rho[(u),(s)] = tr((A^s...)^dagger l A^u... r) for a
/// normalized tensor with fixed points (l, r).
inline CMat reduced_density(const SiteTensor& A, const FixedPoints& fp, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("reduced_density: window size must be 1..3");
  const auto y = detail::window_products(A, k);
  const Eigen::Index n = static_cast<Eigen::Index>(y.size());
  std::vector<CMat> ly;
  ly.reserve(y.size());
  for (const auto& m : y) ly.push_back(fp.l * m * fp.r);
  CMat rho(n, n);
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index s = 0; s < n; ++s) rho(u, s) = (y[s].adjoint() * ly[u]).trace();
  return hermitian_part(rho);
}

inline CMat reduced_density(const SiteTensor& A, int k) {
  const FixedPoints fp = fixed_points(A);
  return reduced_density(normalized(A, fp), fp, k);
}

/// Energy density of a nearest-neighbour term h on (d x d).
inline double energy_density(const SiteTensor& A, const CMat& h) {
  const Eigen::Index d = static_cast<Eigen::Index>(A.size());
  if (h.rows() != d * d || h.cols() != d * d) throw std::invalid_argument("energy_density: h does not match the physical dimension");
  return (h * reduced_density(A, 2)).trace().real();
}

// ---------------------------------------------------------------------------
// ground state

struct GroundStateOptions {
  double tol = 1e-8;     ///< tangent-space gradient norm
  int max_iter = 10000;
  std::uint64_t seed = 1;
  bool verbose = false;
};

struct EnergyReport {
  double energy = 0;
  double grad_norm = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

/// Mixed canonical gauge: AL C = C AR = AC, AL left and AR right isometric.
struct MixedGauge {
  SiteTensor AL, AR, AC;
  CMat C;

  Eigen::Index phys() const { return static_cast<Eigen::Index>(AL.size()); }
  Eigen::Index bond() const { return C.rows(); }
  UMPS left_canonical(std::uint64_t seed = 0) const { return UMPS{AL, seed}; }
};

namespace detail {

inline CMat stack_rows(const SiteTensor& A) {
  const Eigen::Index D = A.front().rows();
  CMat m(static_cast<Eigen::Index>(A.size()) * D, D);
  for (std::size_t s = 0; s < A.size(); ++s) m.middleRows(static_cast<Eigen::Index>(s) * D, D) = A[s];
  return m;
}

inline CMat stack_cols(const SiteTensor& A) {
  const Eigen::Index D = A.front().rows();
  CMat m(D, static_cast<Eigen::Index>(A.size()) * D);
  for (std::size_t s = 0; s < A.size(); ++s) m.middleCols(static_cast<Eigen::Index>(s) * D, D) = A[s];
  return m;
}

inline SiteTensor unstack_rows(const CMat& m, Eigen::Index d) {
  const Eigen::Index D = m.cols();
  SiteTensor out;
  for (Eigen::Index s = 0; s < d; ++s) out.push_back(m.middleRows(s * D, D));
  return out;
}

inline SiteTensor unstack_cols(const CMat& m, Eigen::Index d) {
  const Eigen::Index D = m.rows();
  SiteTensor out;
  for (Eigen::Index s = 0; s < d; ++s) out.push_back(m.middleCols(s * D, D));
  return out;
}

inline CVec flatten(const SiteTensor& A) {
  const Eigen::Index D = A.front().rows();
  CVec v(static_cast<Eigen::Index>(A.size()) * D * D);
  for (std::size_t s = 0; s < A.size(); ++s) v.segment(static_cast<Eigen::Index>(s) * D * D, D * D) = vec(A[s]);
  return v;
}

inline SiteTensor unflatten(const CVec& v, Eigen::Index d, Eigen::Index D) {
  SiteTensor out;
  for (Eigen::Index s = 0; s < d; ++s) out.push_back(unvec(v.segment(s * D * D, D * D), D));
  return out;
}

/// Hermitian square-root factor: m = f^dagger f.
inline CMat psd_factor(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(m));
  RVec ev = es.eigenvalues().cwiseMax(0.0);
  const double floor = 1e-14 * std::max(1.0, ev.maxCoeff());
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = std::sqrt(std::max(ev(i), floor));
  return ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace detail

/// Mixed gauge from a generic injective tensor.
inline MixedGauge mixed_gauge(const SiteTensor& A) {
  const FixedPoints fp = fixed_points(A);
  const SiteTensor An = normalized(A, fp);
  const CMat lh = detail::psd_factor(fp.l);              // l = lh^dagger lh
  const CMat rh = detail::psd_factor(fp.r).adjoint();    // r = rh rh^dagger
  const CMat lh_inv = lh.inverse(), rh_inv = rh.inverse();
  MixedGauge g;
  for (const auto& a : An) {
    g.AL.push_back(lh * a * lh_inv);
    g.AR.push_back(rh_inv * a * rh);
  }
  g.C = lh * rh;
  g.C /= g.C.norm();
  // re-isometrize to remove conditioning errors
  g.AL = detail::unstack_rows(polar_unitary(detail::stack_rows(g.AL)), static_cast<Eigen::Index>(A.size()));
  g.AR = detail::unstack_cols(polar_unitary(detail::stack_cols(g.AR)), static_cast<Eigen::Index>(A.size()));
  for (const auto& al : g.AL) g.AC.push_back(al * g.C);
  return g;
}

/// Two-site density in the mixed gauge, rho[(u,v),(s,t)].
inline CMat two_site_density(const MixedGauge& g) {
  const Eigen::Index d = g.phys();
  std::vector<CMat> y;
  for (Eigen::Index u = 0; u < d; ++u)
    for (Eigen::Index v = 0; v < d; ++v) y.push_back(g.AL[u] * g.AC[v]);
  CMat rho(d * d, d * d);
  for (Eigen::Index i = 0; i < d * d; ++i)
    for (Eigen::Index j = 0; j < d * d; ++j) rho(i, j) = (y[j].adjoint() * y[i]).trace();
  return hermitian_part(rho);
}

namespace detail {

/// Contracts the two-site operator h with a (dD x dD) block matrix P:
/// Q[s][t] = sum_{u,v} h[(s,t),(u,v)] P[u][v] for D x D blocks.
using SparseC = Eigen::SparseMatrix<cplx>;

inline CMat apply_h_blocks(const SparseC& ht, const CMat& p, Eigen::Index d) {
  const Eigen::Index D = p.rows() / d;
  CMat ym(D * D, d * d);
  for (Eigen::Index u = 0; u < d; ++u)
    for (Eigen::Index v = 0; v < d; ++v)
      Eigen::Map<CMat>(ym.col(u * d + v).data(), D, D) = p.block(u * D, v * D, D, D);
  const CMat z = ym * ht;
  CMat q(d * D, d * D);
  for (Eigen::Index s = 0; s < d; ++s)
    for (Eigen::Index t = 0; t < d; ++t) q.block(s * D, t * D, D, D) = Eigen::Map<const CMat>(z.col(s * d + t).data(), D, D);
  return q;
}

struct VumpsEnv {
  CMat h;         ///< shifted local term
  SparseC ht;     ///< its transpose, sparse
  CMat HL, HR;    ///< left/right block Hamiltonians
};

/// Solves (1 - T + |1)(fix|) x = b - tr(fix b) 1 with T the given dense map.
inline CMat solve_env(const CMat& t, const CMat& fix, const CMat& b) {
  const Eigen::Index D = b.rows();
  const CMat id = identity(D);
  CMat m = identity(D * D) - t + vec(id) * vec(fix.transpose()).transpose();
  const CVec rhs = vec(b - (fix * b).trace() * id);
  return hermitian_part(unvec(m.partialPivLu().solve(rhs), D));
}

inline VumpsEnv environments(const MixedGauge& g, const CMat& h, double e) {
  const Eigen::Index d = g.phys(), D = g.bond();
  VumpsEnv env;
  env.h = h - e * identity(d * d);
  env.ht = env.h.transpose().sparseView();
  // left: hl = sum h[(s,t),(u,v)] (AL^s AL^t)^dagger AL^u AL^v
  const CMat pl = stack_rows(g.AL) * stack_cols(g.AL);
  const CMat pr = stack_rows(g.AR) * stack_cols(g.AR);
  const CMat ql = apply_h_blocks(env.ht, pl, d);
  const CMat qr = apply_h_blocks(env.ht, pr, d);
  CMat hl = CMat::Zero(D, D), hr = CMat::Zero(D, D);
  for (Eigen::Index s = 0; s < d; ++s)
    for (Eigen::Index t = 0; t < d; ++t) {
      hl.noalias() += pl.block(s * D, t * D, D, D).adjoint() * ql.block(s * D, t * D, D, D);
      hr.noalias() += qr.block(s * D, t * D, D, D) * pr.block(s * D, t * D, D, D).adjoint();
    }
  CMat tl = CMat::Zero(D * D, D * D), tr = CMat::Zero(D * D, D * D);
  for (Eigen::Index s = 0; s < d; ++s) {
    tl += kron(g.AL[s].transpose(), g.AL[s].adjoint());  // X -> AL^dag X AL
    tr += kron(g.AR[s].conjugate(), g.AR[s]);            // X -> AR X AR^dag
  }
  const CMat rfix = g.C * g.C.adjoint();
  const CMat lfix = g.C.adjoint() * g.C;
  env.HL = solve_env(tl, rfix, hermitian_part(hl));
  env.HR = solve_env(tr, lfix, hermitian_part(hr));
  return env;
}

inline SiteTensor apply_hac(const MixedGauge& g, const VumpsEnv& env, const SiteTensor& ac) {
  const Eigen::Index d = g.phys(), D = g.bond();
  const CMat al = stack_rows(g.AL), ar = stack_cols(g.AR);
  const CMat q1 = apply_h_blocks(env.ht, al * stack_cols(ac), d);
  const CMat q2 = apply_h_blocks(env.ht, stack_rows(ac) * ar, d);
  const CMat left = al.adjoint() * q1;    // block t: sum_s AL[s]^dag Q1[s][t]
  const CMat right = q2 * ar.adjoint();   // block s: sum_t Q2[s][t] AR[t]^dag
  SiteTensor out;
  out.reserve(static_cast<std::size_t>(d));
  for (Eigen::Index s = 0; s < d; ++s)
    out.push_back(left.middleCols(s * D, D) + right.middleRows(s * D, D) + env.HL * ac[s] + ac[s] * env.HR);
  return out;
}

inline CMat apply_hc(const MixedGauge& g, const VumpsEnv& env, const CMat& c) {
  const Eigen::Index d = g.phys();
  const CMat al = stack_rows(g.AL), ar = stack_cols(g.AR);
  const CMat q = apply_h_blocks(env.ht, al * c * ar, d);
  return env.HL * c + c * env.HR + al.adjoint() * q * ar.adjoint();
}

}  // namespace detail

struct GroundState {
  MixedGauge state;
  EnergyReport report;
  std::uint64_t seed = 0;

  UMPS umps() const { return state.left_canonical(seed); }
};

inline double mixed_energy(const MixedGauge& g, const CMat& h) { return (h * two_site_density(g)).trace().real(); }

/// Tangent-space gradient norm |H_AC(AC) - AL H_C(C)| for the current state.
inline double tangent_gradient(const MixedGauge& g, const CMat& h) {
  const double e = mixed_energy(g, h);
  const auto env = detail::environments(g, h, e);
  const SiteTensor hac = detail::apply_hac(g, env, g.AC);
  const CMat hc = detail::apply_hc(g, env, g.C);
  double s = 0;
  for (Eigen::Index k = 0; k < g.phys(); ++k) s += (hac[k] - g.AL[k] * hc).squaredNorm();
  return std::sqrt(s);
}

/// Mixed gauge of a left-isometric tensor (AL is kept as given); `hint`
/// seeds the right fixed-point search.
inline MixedGauge canonicalize_left(SiteTensor AL, const CMat& hint) {
  const Eigen::Index D = AL.front().rows(), d = static_cast<Eigen::Index>(AL.size());
  const auto fp = arnoldi_dominant(
      [&](const CVec& v) { return detail::vec(transfer_right(AL, detail::unvec(v, D))); }, detail::vec(hint), 1e-14);
  if (!(fp.residual <= 1e-10) || std::abs(fp.value - 1.0) > 1e-8)
    throw NonInjectiveError("canonicalize_left: right fixed point did not converge");
  CMat r = detail::hermitian_normalized(detail::unvec(fp.vector, D));
  Eigen::SelfAdjointEigenSolver<CMat> es(r / r.trace().real());
  const RVec sv = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  MixedGauge g;
  g.AL = std::move(AL);
  g.C = es.eigenvectors() * sv.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  g.C /= g.C.norm();
  for (const auto& a : g.AL) g.AC.push_back(a * g.C);
  g.AR = detail::unstack_cols(polar_unitary(g.C).adjoint() * polar_unitary(detail::stack_cols(g.AC)), d);
  return g;
}

namespace detail {

inline double real_inner(const CMat& a, const CMat& b) { return a.cwiseProduct(b.conjugate()).sum().real(); }

/// State on the manifold of left-isometric tensors with its energy and gradient.
struct UmpsPoint {
  MixedGauge g;
  double e = 0;
  CMat q;       ///< stacked AL, (d D) x D
  CMat grad;    ///< Euclidean gradient of e with respect to q (tangent)
  CMat resid;   ///< stacked H_AC(AC) - AL H_C(C)
  double err = 0;
  VumpsEnv env;
};

inline UmpsPoint make_point(MixedGauge g, const CMat& h) {
  UmpsPoint p;
  const Eigen::Index d = g.phys();
  p.e = mixed_energy(g, h);
  p.env = environments(g, h, p.e);
  const SiteTensor hac = apply_hac(g, p.env, g.AC);
  const CMat hc = apply_hc(g, p.env, g.C);
  SiteTensor r;
  for (Eigen::Index k = 0; k < d; ++k) r.push_back(hac[k] - g.AL[k] * hc);
  p.resid = stack_rows(r);
  p.err = p.resid.norm();
  p.grad = 2.0 * p.resid * g.C.adjoint();
  p.q = stack_rows(g.AL);
  p.g = std::move(g);
  return p;
}

inline CMat project_tangent(const CMat& q, const CMat& x) { return x - q * (q.adjoint() * x); }

}  // namespace detail

/// Ground-state search from a given state (warm start): limited-memory BFGS
/// on the manifold of left-isometric tensors (polar retraction, tangent
/// projection as transport, preconditioned by the right fixed point),
/// interleaved with VUMPS fixed-point updates that are kept whenever they
/// lower the energy. Stops when |H_AC(AC) - AL H_C(C)| <= opts.tol.
inline GroundState ground_state_from(const CMat& h, MixedGauge g, const GroundStateOptions& opts) {
  if (hermiticity_error(h) > 1e-10) throw std::invalid_argument("ground_state: h is not Hermitian");
  const Eigen::Index d = g.phys(), D = g.bond();
  if (h.rows() != d * d) throw std::invalid_argument("ground_state: h does not match the physical dimension");
  using detail::UmpsPoint;
  UmpsPoint p = detail::make_point(canonicalize_left(g.AL, g.C * g.C.adjoint()), h);

  GroundState out;
  out.seed = opts.seed;
  const int memory = 8;
  std::vector<CMat> ss, ys;
  std::vector<double> rhos;
  int vumps_wait = 0, vumps_backoff = 1;

  auto precondition = [&](const UmpsPoint& pt, const CMat& x) {
    const double delta = std::clamp(pt.err, 1e-12, 1e-2);
    const CMat m = (pt.g.C * pt.g.C.adjoint() + delta * identity(D)).inverse();
    return CMat(x * m);
  };
  auto try_state = [&](const SiteTensor& al, const CMat& hint, double& e_out) -> std::optional<MixedGauge> {
    try {
      MixedGauge m = canonicalize_left(al, hint);
      e_out = mixed_energy(m, h);
      return m;
    } catch (const NonInjectiveError&) {
      return std::nullopt;
    }
  };

  for (int it = 1; it <= opts.max_iter; ++it) {
    out.state = p.g;
    out.report = {p.e, p.err, it, p.err <= opts.tol};
    if (opts.verbose) std::fprintf(stderr, "umps %5d  e=% .15f  grad=%.3e\n", it, p.e, p.err);
    if (p.err <= opts.tol) return out;
    const double noise = 1e-13 * std::max(1.0, std::abs(p.e));
    const CMat hint = p.g.C * p.g.C.adjoint();

    // VUMPS proposal
    if (vumps_wait-- <= 0) {
      const double eig_tol = std::clamp(p.err * 1e-3, 1e-14, 1e-6);
      auto hac_op = [&](const CVec& x) { return detail::flatten(detail::apply_hac(p.g, p.env, detail::unflatten(x, d, D))); };
      auto hc_op = [&](const CVec& x) { return detail::vec(detail::apply_hc(p.g, p.env, detail::unvec(x, D))); };
      const auto ac = lanczos_lowest(hac_op, detail::flatten(p.g.AC), eig_tol, 30, 4);
      const auto c = lanczos_lowest(hc_op, detail::vec(p.g.C), eig_tol, 30, 4);
      const CMat uc = polar_unitary(detail::unvec(c.vector, D));
      const CMat al = polar_unitary(detail::stack_rows(detail::unflatten(ac.vector, d, D))) * uc.adjoint();
      double e_trial = 0;
      auto trial = try_state(detail::unstack_rows(al, d), hint, e_trial);
      if (trial && e_trial < p.e - noise) {
        p = detail::make_point(std::move(*trial), h);
        ss.clear(), ys.clear(), rhos.clear();
        vumps_backoff = 1;
        continue;
      }
      vumps_wait = vumps_backoff;
      vumps_backoff = std::min(vumps_backoff * 2, 32);
    }

    // L-BFGS direction
    CMat qv = p.grad;
    std::vector<double> alpha(ss.size());
    for (int i = static_cast<int>(ss.size()) - 1; i >= 0; --i) {
      alpha[i] = rhos[i] * detail::real_inner(ss[i], qv);
      qv -= alpha[i] * ys[i];
    }
    CMat r = precondition(p, qv);
    if (!ss.empty()) {
      const CMat py = precondition(p, ys.back());
      r *= detail::real_inner(ss.back(), ys.back()) / detail::real_inner(ys.back(), py);
    }
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const double beta = rhos[i] * detail::real_inner(ys[i], r);
      r += (alpha[i] - beta) * ss[i];
    }
    CMat dir = detail::project_tangent(p.q, r);
    double slope = detail::real_inner(p.grad, dir);
    if (!(slope > 0)) {
      ss.clear(), ys.clear(), rhos.clear();
      dir = detail::project_tangent(p.q, precondition(p, p.grad));
      slope = detail::real_inner(p.grad, dir);
    }

    // backtracking on the energy
    double t = 1.0;
    std::optional<MixedGauge> next;
    for (int ls = 0; ls < 50; ++ls, t *= 0.5) {
      double e_trial = 0;
      auto trial = try_state(detail::unstack_rows(polar_unitary(p.q - t * dir), d), hint, e_trial);
      if (trial && e_trial <= p.e - 1e-4 * t * slope + noise) {
        next = std::move(trial);
        break;
      }
    }
    if (!next) break;
    UmpsPoint n = detail::make_point(std::move(*next), h);
    CMat s_new = detail::project_tangent(n.q, n.q - p.q);
    CMat y_new = n.grad - detail::project_tangent(n.q, p.grad);
    for (auto& x : ss) x = detail::project_tangent(n.q, x);
    for (auto& x : ys) x = detail::project_tangent(n.q, x);
    const double sy = detail::real_inner(s_new, y_new);
    if (sy > 1e-14 * s_new.norm() * y_new.norm()) {
      ss.push_back(std::move(s_new));
      ys.push_back(std::move(y_new));
      rhos.push_back(1.0 / sy);
      if (static_cast<int>(ss.size()) > memory) {
        ss.erase(ss.begin());
        ys.erase(ys.begin());
        rhos.erase(rhos.begin());
      }
    }
    p = std::move(n);
  }
  return out;
}

/// Bond-dimension-D ground state of a nearest-neighbour term from a seeded random start.
inline GroundState ground_state(const CMat& h, Eigen::Index D, const GroundStateOptions& opts = {}) {
  if (D < 1) throw std::invalid_argument("ground_state: D must be >= 1");
  if (opts.tol <= 0) throw std::invalid_argument("ground_state: tol must be positive");
  const Eigen::Index d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(h.rows()))));
  if (d * d != h.rows() || h.rows() != h.cols()) throw std::invalid_argument("ground_state: h must be (d^2 x d^2)");
  std::uint64_t seed = opts.seed;
  for (int attempt = 0;; ++attempt) {
    try {
      MixedGauge g = mixed_gauge(random_umps(d, D, seed).A);
      return ground_state_from(h, std::move(g), opts);
    } catch (const NonInjectiveError&) {
      if (attempt >= 10) throw;
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    }
  }
}

// ---------------------------------------------------------------------------
// checkpoints

inline void write_checkpoint(std::ostream& os, const UMPS& m, double energy) {
  const Eigen::Index d = m.phys(), D = m.bond();
  os << "# umps checkpoint\n";
  os << "d " << d << "\nD " << D << "\nseed " << m.seed << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", energy);
  os << "energy " << buf << "\n";
  os << "data\n";
  for (Eigen::Index s = 0; s < d; ++s)
    for (Eigen::Index i = 0; i < D; ++i)
      for (Eigen::Index j = 0; j < D; ++j) {
        const cplx z = m.A[s](i, j);
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", z.real(), z.imag());
        os << buf;
      }
}

struct Checkpoint {
  UMPS state;
  double energy = 0;
};

inline Checkpoint read_checkpoint(std::istream& is) {
  std::string line, key;
  Eigen::Index d = -1, D = -1;
  Checkpoint c;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    ls >> key;
    if (key == "d") ls >> d;
    else if (key == "D") ls >> D;
    else if (key == "seed") ls >> c.state.seed;
    else if (key == "energy") ls >> c.energy;
    else if (key == "data") break;
    else throw std::runtime_error("checkpoint: unknown header field '" + key + "'");
  }
  if (d < 1 || D < 1) throw std::runtime_error("checkpoint: missing dimensions");
  for (Eigen::Index s = 0; s < d; ++s) {
    CMat a(D, D);
    for (Eigen::Index i = 0; i < D; ++i)
      for (Eigen::Index j = 0; j < D; ++j) {
        double re, im;
        if (!(is >> re >> im)) throw std::runtime_error("checkpoint: truncated payload");
        a(i, j) = cplx(re, im);
      }
    c.state.A.push_back(std::move(a));
  }
  return c;
}

}  // namespace ticontext
