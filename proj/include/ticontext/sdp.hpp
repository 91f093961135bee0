#pragma once

// Primal-dual interior point (HKM direction, Mehrotra predictor-corrector)
// for moment-matrix SDPs
//   minimize  sum_k c_k y_k  subject to  Gamma(y) = F_0 + sum_k y_k F_k >= 0,
// where every entry of Gamma belongs to exactly one class: class 0 is the
// constant 1, class k >= 1 is the free moment y_k, and F_k is the 0/1
// indicator of the entries in class k.
//
// Internally the solver works with the standard pair
//   (P) min <C, X>  s.t. <A_k, X> = c_k, X >= 0
//   (D) max c^T u   s.t. sum_k u_k A_k + Z = C, Z >= 0
// with C = F_0, A_k = F_k, u = -y.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ticontext/linalg.hpp"
#include "ticontext/parallel.hpp"

namespace ticontext {

struct MomentProblem {
  int size = 0;              ///< matrix dimension m
  int classes = 0;           ///< including the constant class 0
  std::vector<int> cls;      ///< m*m, row-major, symmetric
  std::vector<double> cost;  ///< per class; cost[0] is an additive constant

  int cls_at(int p, int q) const { return cls[static_cast<std::size_t>(p) * static_cast<std::size_t>(size) + static_cast<std::size_t>(q)]; }

  void validate() const {
    if (size < 1 || classes < 1) throw std::invalid_argument("MomentProblem: empty problem");
    if (cls.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) throw std::invalid_argument("MomentProblem: class map has the wrong size");
    if (cost.size() != static_cast<std::size_t>(classes)) throw std::invalid_argument("MomentProblem: cost has the wrong size");
    for (int p = 0; p < size; ++p)
      for (int q = 0; q < size; ++q) {
        const int k = cls_at(p, q);
        if (k < 0 || k >= classes) throw std::invalid_argument("MomentProblem: class index out of range");
        if (k != cls_at(q, p)) throw std::invalid_argument("MomentProblem: class map is not symmetric");
      }
  }
};

struct SdpOptions {
  double tol = 1e-8;
  int max_iter = 100;
  double step = 0.95;
  int workers = 1;
  bool verbose = false;
};

enum class SdpStatus { optimal, gap_not_reached, failed };

inline std::string to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::optimal: return "optimal";
    case SdpStatus::gap_not_reached: return "gap-not-reached";
    case SdpStatus::failed: return "failed";
  }
  return "?";
}

struct SdpResult {
  SdpStatus status = SdpStatus::failed;
  double primal = 0;     ///< objective at the moment vector y (upper estimate)
  double dual = 0;       ///< -<C, X> at the final X (lower estimate)
  double certified = 0;  ///< lower bound valid for every feasible Gamma, see certify()
  double gap = 0;        ///< relative duality gap
  double primal_infeasibility = 0, dual_infeasibility = 0;
  int iterations = 0;
  std::vector<double> y;  ///< moments, y[0] = 1
  RMat X;                 ///< dual matrix
};

namespace detail {

struct MomentOperator {
  const MomentProblem& pr;
  std::vector<std::vector<std::pair<int, int>>> entries;  // per class

  explicit MomentOperator(const MomentProblem& p) : pr(p), entries(static_cast<std::size_t>(p.classes)) {
    for (int a = 0; a < p.size; ++a)
      for (int b = 0; b < p.size; ++b) entries[static_cast<std::size_t>(p.cls_at(a, b))].emplace_back(a, b);
  }

  // (<A_k, W>)_k for k >= 1, stored at index k - 1
  RVec apply(const RMat& w) const {
    RVec out = RVec::Zero(pr.classes - 1);
    for (int a = 0; a < pr.size; ++a)
      for (int b = 0; b < pr.size; ++b) {
        const int k = pr.cls_at(a, b);
        if (k > 0) out(k - 1) += w(a, b);
      }
    return out;
  }

  // sum_k u_k A_k
  RMat adjoint(const RVec& u) const {
    RMat out(pr.size, pr.size);
    for (int a = 0; a < pr.size; ++a)
      for (int b = 0; b < pr.size; ++b) {
        const int k = pr.cls_at(a, b);
        out(a, b) = k > 0 ? u(k - 1) : 0.0;
      }
    return out;
  }

  RMat constant() const {
    RMat out = RMat::Zero(pr.size, pr.size);
    for (const auto& [a, b] : entries[0]) out(a, b) = 1;
    return out;
  }

  // Schur complement M_ij = tr(A_i X A_j Zinv)
  RMat schur(const RMat& x, const RMat& zinv, int workers) const {
    const int nv = pr.classes - 1, m = pr.size;
    RMat s = RMat::Zero(nv, nv);
    parallel_for(
        static_cast<std::size_t>(nv),
        [&](std::size_t jj) {
          const auto& e = entries[jj + 1];
          std::vector<int> rows;
          std::vector<int> slot(static_cast<std::size_t>(m), -1);
          for (const auto& [r, c] : e)
            if (slot[static_cast<std::size_t>(r)] < 0) {
              slot[static_cast<std::size_t>(r)] = static_cast<int>(rows.size());
              rows.push_back(r);
            }
          const auto nr = static_cast<Eigen::Index>(rows.size());
          RMat g = RMat::Zero(nr, m), xr(m, nr);
          for (const auto& [r, c] : e) g.row(slot[static_cast<std::size_t>(r)]) += zinv.row(c);
          for (Eigen::Index k = 0; k < nr; ++k) xr.col(k) = x.col(rows[static_cast<std::size_t>(k)]);
          const RMat p = xr * g;  // X A_j Zinv
          auto col = s.col(static_cast<Eigen::Index>(jj));
          for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
              const int k = pr.cls_at(a, b);
              if (k > 0) col(k - 1) += p(b, a);
            }
        },
        workers);
    return (0.5 * (s + s.transpose())).eval();
  }
};

inline RMat sym(const RMat& a) { return (0.5 * (a + a.transpose())).eval(); }

// largest alpha with X + alpha dX >= 0 (infinity if dX >= 0)
inline double max_step(const Eigen::LLT<RMat>& chol, const RMat& dx) {
  const RMat l = chol.matrixL();
  RMat t = l.triangularView<Eigen::Lower>().solve(dx);
  t = l.triangularView<Eigen::Lower>().solve(t.transpose()).transpose();
  const double lmin = Eigen::SelfAdjointEigenSolver<RMat>(sym(t), Eigen::EigenvaluesOnly).eigenvalues()(0);
  return lmin >= 0 ? 1e300 : -1.0 / lmin;
}

inline double min_eigenvalue(const RMat& a) {
  return Eigen::SelfAdjointEigenSolver<RMat>(sym(a), Eigen::EigenvaluesOnly).eigenvalues()(0);
}

}  // namespace detail

/// Lower bound on min c^T y over all y with Gamma(y) >= 0, from any symmetric X.
/// X is first shifted class by class so that <A_k, X> = c_k holds exactly. For
/// feasible Gamma, c^T y = <Gamma, X> - <C, X> and <Gamma, X> >= tr(Gamma) min(0, lambda_min(X)),
/// with tr(Gamma) = m when every diagonal entry is the constant class.
inline double certify(const MomentProblem& pr, const RMat& x) {
  for (int p = 0; p < pr.size; ++p)
    if (pr.cls_at(p, p) != 0) throw std::invalid_argument("certify: diagonal entries must be the constant class");
  detail::MomentOperator op(pr);
  RMat xc = x;
  const RVec ax = op.apply(x);
  for (int k = 1; k < pr.classes; ++k) {
    const auto& e = op.entries[static_cast<std::size_t>(k)];
    const double shift = (pr.cost[static_cast<std::size_t>(k)] - ax(k - 1)) / static_cast<double>(e.size());
    for (const auto& [a, b] : e) xc(a, b) += shift;
  }
  xc = detail::sym(xc);
  double cx = 0;
  for (const auto& [a, b] : op.entries[0]) cx += xc(a, b);
  const double lmin = detail::min_eigenvalue(xc);
  return pr.cost[0] - cx + pr.size * std::min(0.0, lmin);
}

inline SdpResult solve_moment_sdp(const MomentProblem& pr, const SdpOptions& o = {}) {
  pr.validate();
  const int m = pr.size, nv = pr.classes - 1;
  detail::MomentOperator op(pr);
  for (int k = 1; k < pr.classes; ++k)
    if (op.entries[static_cast<std::size_t>(k)].empty()) throw std::invalid_argument("solve_moment_sdp: class " + std::to_string(k) + " has no entries");

  const RMat C = op.constant();
  RVec b(nv);
  for (int k = 1; k < pr.classes; ++k) b(k - 1) = pr.cost[static_cast<std::size_t>(k)];

  double anorm = 0, bscale = 0;
  for (int k = 1; k < pr.classes; ++k) {
    const double nk = std::sqrt(static_cast<double>(op.entries[static_cast<std::size_t>(k)].size()));
    anorm = std::max(anorm, nk);
    bscale = std::max(bscale, std::abs(b(k - 1)) / (1 + nk));
  }
  const double zeta = std::max({10.0, std::sqrt(double(m)), m * bscale});
  const double eta = std::max({10.0, std::sqrt(double(m)), anorm, C.norm()});
  RMat X = zeta * RMat::Identity(m, m), Z = eta * RMat::Identity(m, m);
  RVec u = RVec::Zero(nv);

  SdpResult res;
  const double bnorm = b.norm(), cnorm = C.norm();
  for (int it = 0; it < o.max_iter; ++it) {
    const RVec rp = b - op.apply(X);
    const RMat rd = C - Z - op.adjoint(u);
    const double pobj = (C.cwiseProduct(X)).sum(), dobj = b.dot(u);
    const double mu = X.cwiseProduct(Z).sum() / m;
    res.gap = std::abs(pobj - dobj) / (1 + std::abs(pobj) + std::abs(dobj));
    res.primal_infeasibility = rp.norm() / (1 + bnorm);
    res.dual_infeasibility = rd.norm() / (1 + cnorm);
    res.iterations = it;
    if (o.verbose)
      std::fprintf(stderr, "sdp %3d pobj %.10f dobj %.10f gap %.2e pinf %.2e dinf %.2e\n", it, pobj, dobj, res.gap,
                   res.primal_infeasibility, res.dual_infeasibility);
    if (res.gap < o.tol && res.primal_infeasibility < o.tol && res.dual_infeasibility < o.tol) {
      res.status = SdpStatus::optimal;
      break;
    }

    Eigen::LLT<RMat> zc(Z), xc(X);
    if (zc.info() != Eigen::Success || xc.info() != Eigen::Success) break;
    const RMat zinv = zc.solve(RMat::Identity(m, m));
    const RMat M = op.schur(X, zinv, o.workers);
    Eigen::LLT<RMat> mc(M);
    if (mc.info() != Eigen::Success) break;
    const RMat xrz = X * rd * zinv;
    const RVec a_zinv = op.apply(zinv), a_xrz = op.apply(xrz);

    auto direction = [&](double sigma_mu, const RMat* corr, RVec& du, RMat& dx, RMat& dz) {
      RVec rhs = b - sigma_mu * a_zinv + a_xrz;
      if (corr) rhs += op.apply(*corr);
      du = mc.solve(rhs);
      dz = rd - op.adjoint(du);
      RMat t = sigma_mu * zinv - X - X * dz * zinv;
      if (corr) t -= *corr;
      dx = detail::sym(t);
    };

    RVec du;
    RMat dx, dz;
    direction(0.0, nullptr, du, dx, dz);
    double ap = std::min(1.0, detail::max_step(xc, dx)), ad = std::min(1.0, detail::max_step(zc, dz));
    const double mu_aff = (X + ap * dx).cwiseProduct(Z + ad * dz).sum() / m;
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3), 0.0, 1.0);
    const RMat corr = dx * dz * zinv;
    direction(sigma * mu, &corr, du, dx, dz);
    ap = std::min(1.0, o.step * detail::max_step(xc, dx));
    ad = std::min(1.0, o.step * detail::max_step(zc, dz));
    X += ap * dx;
    Z += ad * dz;
    u += ad * du;
    X = detail::sym(X);
    Z = detail::sym(Z);
    res.iterations = it + 1;
  }
  if (res.status != SdpStatus::optimal) res.status = SdpStatus::gap_not_reached;

  res.y.assign(static_cast<std::size_t>(pr.classes), 0.0);
  res.y[0] = 1;
  double primal = pr.cost[0];
  for (int k = 1; k < pr.classes; ++k) {
    res.y[static_cast<std::size_t>(k)] = -u(k - 1);
    primal += pr.cost[static_cast<std::size_t>(k)] * res.y[static_cast<std::size_t>(k)];
  }
  res.primal = primal;
  res.dual = pr.cost[0] - C.cwiseProduct(X).sum();
  res.X = X;
  res.certified = certify(pr, X);
  return res;
}

}  // namespace ticontext
