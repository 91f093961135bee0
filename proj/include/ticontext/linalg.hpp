#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace ticontext {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

inline CMat kron(const CMat& a, const CMat& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

inline CMat kron(const CMat& a, const CMat& b, const CMat& c) {
  return kron(kron(a, b), c);
}

inline CMat identity(Eigen::Index n) { return CMat::Identity(n, n); }

/// Matrix exponential (Pade scaling-and-squaring).
inline CMat expm(const CMat& s) { return s.exp().eval(); }

/// Frechet derivative of the matrix exponential at `s` in direction `e`,
/// read off the upper-right block of exp([[s, e], [0, s]]).
inline CMat expm_frechet(const CMat& s, const CMat& e) {
  const Eigen::Index n = s.rows();
  CMat big = CMat::Zero(2 * n, 2 * n);
  big.topLeftCorner(n, n) = s;
  big.topRightCorner(n, n) = e;
  big.bottomRightCorner(n, n) = s;
  const CMat ex = big.exp();
  return ex.topRightCorner(n, n);
}

inline CMat hermitian_part(const CMat& m) { return (0.5 * (m + m.adjoint())).eval(); }

inline double hermiticity_error(const CMat& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

/// Eigenvalues of a Hermitian matrix in ascending order.
inline RVec hermitian_eigenvalues(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

inline CMat random_complex(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  CMat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cplx(nd(rng), nd(rng));
  return m;
}

inline CMat random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  return hermitian_part(random_complex(n, n, rng));
}

/// Unitary factor of the polar decomposition m = U P (m is tall or square).
inline CMat polar_unitary(const CMat& m) {
  Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

/// Partial trace of an operator on (d_left x d_right), tracing out the right factor.
inline CMat trace_right(const CMat& rho, Eigen::Index d_left, Eigen::Index d_right) {
  CMat out = CMat::Zero(d_left, d_left);
  for (Eigen::Index i = 0; i < d_left; ++i)
    for (Eigen::Index j = 0; j < d_left; ++j)
      for (Eigen::Index k = 0; k < d_right; ++k) out(i, j) += rho(i * d_right + k, j * d_right + k);
  return out;
}

/// Partial trace tracing out the left factor.
inline CMat trace_left(const CMat& rho, Eigen::Index d_left, Eigen::Index d_right) {
  CMat out = CMat::Zero(d_right, d_right);
  for (Eigen::Index i = 0; i < d_right; ++i)
    for (Eigen::Index j = 0; j < d_right; ++j)
      for (Eigen::Index k = 0; k < d_left; ++k) out(i, j) += rho(k * d_right + i, k * d_right + j);
  return out;
}

/// Traces out the middle factor of an operator on (a x b x c).
inline CMat trace_middle(const CMat& rho, Eigen::Index a, Eigen::Index b, Eigen::Index c) {
  CMat out = CMat::Zero(a * c, a * c);
  for (Eigen::Index i = 0; i < a; ++i)
    for (Eigen::Index k = 0; k < c; ++k)
      for (Eigen::Index i2 = 0; i2 < a; ++i2)
        for (Eigen::Index k2 = 0; k2 < c; ++k2) {
          cplx acc = 0.0;
          for (Eigen::Index j = 0; j < b; ++j) acc += rho((i * b + j) * c + k, (i2 * b + j) * c + k2);
          out(i * c + k, i2 * c + k2) = acc;
        }
  return out;
}

}  // namespace ticontext
