#pragma once

// Small Krylov eigensolvers for matrix-free operators.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "ticontext/linalg.hpp"

namespace ticontext {

using LinearMap = std::function<CVec(const CVec&)>;

struct DominantEig {
  cplx value;
  CVec vector;
  double second_magnitude = 0;  ///< largest |Ritz value| after the leading one
  double residual = 0;
  bool exact_subspace = false;  ///< Krylov space became invariant
};

/// Largest-magnitude eigenpair of a general operator by restarted Arnoldi.
inline DominantEig arnoldi_dominant(const LinearMap& op, CVec x0, double tol = 1e-12, int krylov_dim = 40,
                                    int max_restarts = 200) {
  const Eigen::Index n = x0.size();
  const int m = static_cast<int>(std::min<Eigen::Index>(krylov_dim, n));
  DominantEig out;
  for (int restart = 0; restart < max_restarts; ++restart) {
    CMat v = CMat::Zero(n, m + 1);
    CMat h = CMat::Zero(m + 1, m);
    v.col(0) = x0 / x0.norm();
    int k = 0;
    bool invariant = false;
    for (; k < m; ++k) {
      CVec w = op(v.col(k));
      for (int pass = 0; pass < 2; ++pass)
        for (int j = 0; j <= k; ++j) {
          const cplx c = v.col(j).dot(w);
          h(j, k) += c;
          w -= c * v.col(j);
        }
      const double beta = w.norm();
      h(k + 1, k) = beta;
      if (beta < 1e-14 * std::max(1.0, h.col(k).norm())) {
        ++k;
        invariant = true;
        break;
      }
      v.col(k + 1) = w / beta;
    }
    Eigen::ComplexEigenSolver<CMat> es(h.topLeftCorner(k, k));
    const auto& ev = es.eigenvalues();
    Eigen::Index lead = 0;
    for (Eigen::Index i = 1; i < ev.size(); ++i)
      if (std::abs(ev(i)) > std::abs(ev(lead))) lead = i;
    double second = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      if (i != lead) second = std::max(second, std::abs(ev(i)));
    const CVec y = es.eigenvectors().col(lead);
    CVec x = v.leftCols(k) * y;
    const double nx = x.norm();
    x /= nx;
    const double res = invariant ? 0.0 : std::abs(h(k, k - 1) * y(k - 1)) / nx;
    out = {ev(lead), x, second, res, invariant};
    if (invariant || res <= tol * std::max(1.0, std::abs(ev(lead)))) return out;
    x0 = x;
  }
  return out;
}

struct LowestEig {
  double value = 0;
  CVec vector;
  double residual = 0;
};

/// Lowest eigenpair of a Hermitian operator by restarted Lanczos with full reorthogonalization.
inline LowestEig lanczos_lowest(const LinearMap& op, CVec x0, double tol = 1e-12, int krylov_dim = 30,
                                int max_restarts = 100) {
  const Eigen::Index n = x0.size();
  const int m = static_cast<int>(std::min<Eigen::Index>(krylov_dim, n));
  if (x0.norm() == 0) x0 = CVec::Ones(n);
  LowestEig out;
  for (int restart = 0; restart < max_restarts; ++restart) {
    CMat v(n, m);
    CMat av(n, m);
    v.col(0) = x0 / x0.norm();
    int k = 0;
    for (; k < m; ++k) {
      av.col(k) = op(v.col(k));
      if (k + 1 == m) {
        ++k;
        break;
      }
      CVec w = av.col(k);
      for (int pass = 0; pass < 2; ++pass) w -= v.leftCols(k + 1) * (v.leftCols(k + 1).adjoint() * w);
      const double beta = w.norm();
      if (beta < 1e-13) {
        ++k;
        break;
      }
      v.col(k + 1) = w / beta;
    }
    // Rayleigh-Ritz on the (reorthogonalized) basis
    CMat t = v.leftCols(k).adjoint() * av.leftCols(k);
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(t));
    const CVec y = es.eigenvectors().col(0);
    CVec x = v.leftCols(k) * y;
    CVec ax = av.leftCols(k) * y;
    const double nx = x.norm();
    x /= nx;
    ax /= nx;
    const double theta = x.dot(ax).real();
    const double res = (ax - theta * x).norm();
    out = {theta, x, res};
    if (res <= tol * std::max(1.0, std::abs(theta))) return out;
    x0 = x;
  }
  return out;
}

}  // namespace ticontext
