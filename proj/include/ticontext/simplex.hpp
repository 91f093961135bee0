#pragma once

// Dense two-phase tableau simplex for standard-form LPs
//   minimize c^T x  subject to  A x = b,  x >= 0,
// in floating point or exact rational arithmetic, plus an exact rational LU
// used to certify a basis found in floating point.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "ticontext/rational.hpp"

namespace ticontext {

enum class LPStatus { optimal, infeasible, unbounded, iteration_limit };

inline std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
    case LPStatus::iteration_limit: return "iteration-limit";
  }
  return "?";
}

template <class T>
struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  T value{};
  std::vector<T> x;
  std::vector<std::size_t> basis;  ///< basic columns, one per non-redundant row
  long pivots = 0;
};

struct SimplexOptions {
  bool bland = false;        ///< Bland's rule throughout (always used after stalls)
  long max_pivots = 1000000;
  double tol = 1e-9;         ///< floating point only
  int stall_limit = 50;      ///< degenerate pivots before switching to Bland's rule
};

namespace detail {

template <class T>
struct Tableau {
  std::size_t rows = 0, cols = 0;  // cols includes the rhs as the last column
  std::vector<T> a;

  T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  void pivot(std::size_t r, std::size_t c) {
    const T p = at(r, c);
    for (std::size_t j = 0; j < cols; ++j) at(r, j) /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const T f = at(i, c);
      if (f == T(0)) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (at(r, j) != T(0)) at(i, j) -= f * at(r, j);
      if constexpr (std::is_floating_point_v<T>) at(i, c) = 0;
    }
  }
};

template <class T>
bool positive(const T& v, double tol) {
  if constexpr (std::is_floating_point_v<T>)
    return v > tol;
  else
    return sgn(v) > 0;
}

template <class T>
bool negative(const T& v, double tol) {
  if constexpr (std::is_floating_point_v<T>)
    return v < -tol;
  else
    return sgn(v) < 0;
}

/// Runs simplex iterations on tableau rows [0, m) with the objective in row m
/// (reduced costs; rhs entry holds -objective). Columns >= `allowed` never enter.
template <class T>
LPStatus iterate(Tableau<T>& t, std::vector<std::size_t>& basis, std::size_t m, std::size_t allowed,
                 const SimplexOptions& o, long& pivots) {
  const std::size_t rhs = t.cols - 1;
  int stall = 0;
  for (;;) {
    if (pivots >= o.max_pivots) return LPStatus::iteration_limit;
    const bool bland = o.bland || stall >= o.stall_limit;
    std::size_t enter = allowed;
    for (std::size_t j = 0; j < allowed; ++j) {
      if (!negative(t.at(m, j), o.tol)) continue;
      if (bland) {
        enter = j;
        break;
      }
      if (enter == allowed || t.at(m, j) < t.at(m, enter)) enter = j;
    }
    if (enter == allowed) return LPStatus::optimal;
    std::size_t leave = m;
    T best{};
    for (std::size_t i = 0; i < m; ++i) {
      if (!positive(t.at(i, enter), o.tol)) continue;
      const T ratio = t.at(i, rhs) / t.at(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return LPStatus::unbounded;
    const bool degenerate = !positive(best, o.tol);
    stall = degenerate ? stall + 1 : 0;
    t.pivot(leave, enter);
    basis[leave] = enter;
    ++pivots;
  }
}

}  // namespace detail

/// Two-phase simplex on a dense row-major A (rows x cols).
template <class T>
LPSolution<T> simplex(const std::vector<std::vector<T>>& A, const std::vector<T>& b, const std::vector<T>& c,
                      const SimplexOptions& o = {}) {
  const std::size_t m = A.size(), n = c.size();
  if (b.size() != m) throw std::invalid_argument("simplex: rhs length mismatch");
  for (const auto& row : A)
    if (row.size() != n) throw std::invalid_argument("simplex: ragged constraint matrix");

  // phase one: artificial columns n..n+m-1, rhs made non-negative
  detail::Tableau<T> t;
  t.rows = m + 1;
  t.cols = n + m + 1;
  t.a.assign(t.rows * t.cols, T(0));
  const std::size_t rhs = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = detail::negative(b[i], 0.0);
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = flip ? T(-A[i][j]) : A[i][j];
    t.at(i, n + i) = T(1);
    t.at(i, rhs) = flip ? T(-b[i]) : b[i];
    for (std::size_t j = 0; j < n; ++j) t.at(m, j) -= t.at(i, j);
    t.at(m, rhs) -= t.at(i, rhs);
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  LPSolution<T> out;
  auto st = detail::iterate(t, basis, m, n, o, out.pivots);
  if (st == LPStatus::iteration_limit) {
    out.status = st;
    return out;
  }
  if (detail::negative(T(-t.at(m, rhs)), o.tol) || detail::positive(T(-t.at(m, rhs)), o.tol)) {
    out.status = LPStatus::infeasible;
    return out;
  }

  // drive artificials out of the basis; rows where that is impossible are redundant
  std::vector<bool> redundant(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    std::size_t piv = n;
    for (std::size_t j = 0; j < n; ++j)
      if (detail::positive(t.at(i, j), o.tol) || detail::negative(t.at(i, j), o.tol)) {
        piv = j;
        break;
      }
    if (piv == n) {
      redundant[i] = true;
      continue;
    }
    t.pivot(i, piv);
    basis[i] = piv;
    ++out.pivots;
  }

  // phase two objective
  for (std::size_t j = 0; j < t.cols; ++j) t.at(m, j) = j < n ? c[j] : T(0);
  for (std::size_t i = 0; i < m; ++i) {
    if (redundant[i]) continue;
    const T cb = c[basis[i]];
    if (cb == T(0)) continue;
    for (std::size_t j = 0; j < t.cols; ++j) t.at(m, j) -= cb * t.at(i, j);
  }
  // redundant rows: zero them so they never take part in ratio tests
  for (std::size_t i = 0; i < m; ++i)
    if (redundant[i])
      for (std::size_t j = 0; j < t.cols; ++j) t.at(i, j) = T(0);

  st = detail::iterate(t, basis, m, n, o, out.pivots);
  out.status = st;
  if (st != LPStatus::optimal) return out;
  out.x.assign(n, T(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (redundant[i]) continue;
    out.x[basis[i]] = t.at(i, rhs);
    out.basis.push_back(basis[i]);
  }
  out.value = T(-t.at(m, rhs));
  return out;
}

// ---------------------------------------------------------------------------
// exact LU

/// PA = LU over the rationals with first-nonzero pivoting; solves A x = b and
/// A^T y = c exactly. Throws if A is singular.
class RationalLU {
 public:
  explicit RationalLU(std::vector<std::vector<Rational>> a) : n_(a.size()), lu_(std::move(a)), perm_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (lu_[i].size() != n_) throw std::invalid_argument("RationalLU: matrix must be square");
      perm_[i] = i;
    }
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t p = k;
      while (p < n_ && sgn(lu_[p][k]) == 0) ++p;
      if (p == n_) throw std::runtime_error("RationalLU: singular matrix");
      std::swap(lu_[p], lu_[k]);
      std::swap(perm_[p], perm_[k]);
      const Rational inv = 1 / lu_[k][k];
      for (std::size_t i = k + 1; i < n_; ++i) {
        if (sgn(lu_[i][k]) == 0) continue;
        lu_[i][k] *= inv;
        const Rational f = lu_[i][k];
        for (std::size_t j = k + 1; j < n_; ++j)
          if (sgn(lu_[k][j]) != 0) lu_[i][j] -= f * lu_[k][j];
      }
    }
  }

  std::vector<Rational> solve(const std::vector<Rational>& b) const {
    std::vector<Rational> y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      y[i] = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j)
        if (sgn(lu_[i][j]) != 0) y[i] -= lu_[i][j] * y[j];
    }
    for (std::size_t i = n_; i-- > 0;) {
      for (std::size_t j = i + 1; j < n_; ++j)
        if (sgn(lu_[i][j]) != 0) y[i] -= lu_[i][j] * y[j];
      y[i] /= lu_[i][i];
    }
    return y;
  }

  std::vector<Rational> solve_transpose(const std::vector<Rational>& c) const {
    // A^T = U^T L^T P
    std::vector<Rational> z(c);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (sgn(lu_[j][i]) != 0) z[i] -= lu_[j][i] * z[j];
      z[i] /= lu_[i][i];
    }
    for (std::size_t i = n_; i-- > 0;)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (sgn(lu_[j][i]) != 0) z[i] -= lu_[j][i] * z[j];
    std::vector<Rational> y(n_);
    for (std::size_t i = 0; i < n_; ++i) y[perm_[i]] = z[i];
    return y;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<Rational>> lu_;
  std::vector<std::size_t> perm_;
};

}  // namespace ticontext
