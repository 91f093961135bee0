#pragma once

// Dichotomic local observables sigma = exp(S) Lambda exp(S)^dagger, with S a
// real combination of skew-Hermitian generators and Lambda = diag(+-1).

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ticontext/linalg.hpp"
#include "ticontext/scenario.hpp"

namespace ticontext {

enum class BasisKind {
  real_antisymmetric,  ///< E_ij - E_ji, i < j: d(d-1)/2 generators
  full,                ///< adds i(E_ij + E_ji): d^2 - d generators
};

inline BasisKind parse_basis_kind(const std::string& s) {
  if (s == "real" || s == "real_antisymmetric") return BasisKind::real_antisymmetric;
  if (s == "full" || s == "complex") return BasisKind::full;
  throw std::invalid_argument("unknown basis kind '" + s + "'");
}

inline std::size_t basis_size(int d, BasisKind kind) {
  const auto dd = static_cast<std::size_t>(d);
  return kind == BasisKind::full ? dd * dd - dd : dd * (dd - 1) / 2;
}

/// Generator E_ij - E_ji.
inline CMat rotation_generator(int d, int i, int j) {
  CMat g = CMat::Zero(d, d);
  g(i, j) = 1.0;
  g(j, i) = -1.0;
  return g;
}

/// Trace-orthogonal basis of off-diagonal skew-Hermitian d x d matrices. Real
/// antisymmetric generators come first in lexicographic (i, j) order, then
/// (full kind only) the imaginary symmetric ones in the same order.
inline std::vector<CMat> skew_basis(int d, BasisKind kind) {
  if (d < 2) throw std::invalid_argument("skew_basis: dimension must be >= 2");
  std::vector<CMat> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) out.push_back(rotation_generator(d, i, j));
  if (kind == BasisKind::full) {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        CMat g = CMat::Zero(d, d);
        g(i, j) = cplx(0.0, 1.0);
        g(j, i) = cplx(0.0, 1.0);
        out.push_back(g);
      }
  }
  return out;
}

/// Per-observable counts of -1 eigenvalues at a fixed local dimension.
struct Signature {
  int dim = 2;
  std::vector<int> minus_counts;

  void validate() const {
    if (dim < 1) throw std::invalid_argument("signature: dimension must be positive");
    for (int n : minus_counts)
      if (n < 0 || n > dim) throw std::invalid_argument("signature: entry out of range [0, d]");
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < minus_counts.size(); ++i) os << (i ? "," : "") << minus_counts[i];
    os << ']';
    return os.str();
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// All (d+1)^X signatures in lexicographic order.
inline std::vector<Signature> enumerate_signatures(int d, int observables) {
  if (d < 2) throw std::invalid_argument("enumerate_signatures: d must be >= 2");
  if (observables < 2 || observables > 3) throw std::invalid_argument("enumerate_signatures: X must be 2 or 3");
  std::vector<Signature> out;
  std::vector<int> cur(static_cast<std::size_t>(observables), 0);
  while (true) {
    out.push_back(Signature{d, cur});
    int pos = observables - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == d) cur[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
  }
  return out;
}

/// Canonical diagonal: min(n, d-n) blocks diag(1,-1) first, then the surplus
/// sign. n=2, d=3 gives (1,-1,-1); n=2, d=5 gives (1,-1,1,-1,1).
inline RVec canonical_lambda(int d, int n_minus) {
  if (n_minus < 0 || n_minus > d) throw std::invalid_argument("canonical_lambda: count out of range");
  const int pairs = std::min(n_minus, d - n_minus);
  RVec lam(d);
  for (int p = 0; p < pairs; ++p) {
    lam(2 * p) = 1.0;
    lam(2 * p + 1) = -1.0;
  }
  const double rest = (n_minus > d - n_minus) ? -1.0 : 1.0;
  for (int i = 2 * pairs; i < d; ++i) lam(i) = rest;
  return lam;
}

/// sigma(w) = exp(S(w)) diag(lambda) exp(S(w))^dagger, S(w) = sum_k w_k G_k.
class ObservableFamily {
 public:
  ObservableFamily() = default;
  ObservableFamily(RVec lambda, std::vector<CMat> generators)
      : lambda_(std::move(lambda)), generators_(std::move(generators)) {
    for (const auto& g : generators_)
      if (g.rows() != lambda_.size() || g.cols() != lambda_.size())
        throw std::invalid_argument("ObservableFamily: generator size mismatch");
  }

  int dim() const { return static_cast<int>(lambda_.size()); }
  std::size_t parameter_count() const { return generators_.size(); }
  const RVec& lambda() const { return lambda_; }
  const std::vector<CMat>& generators() const { return generators_; }

  int minus_count() const { return static_cast<int>((lambda_.array() < 0.0).count()); }

  CMat generator_sum(std::span<const double> w) const {
    check(w);
    CMat s = CMat::Zero(dim(), dim());
    for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * generators_[k];
    return s;
  }

  CMat operator()(std::span<const double> w) const {
    const CMat u = expm(generator_sum(w));
    return hermitian_part(u * lambda_.cast<cplx>().asDiagonal() * u.adjoint());
  }

  /// d sigma / d w_k for every k.
  std::vector<CMat> derivatives(std::span<const double> w) const {
    const CMat s = generator_sum(w);
    const CMat u = expm(s);
    const CMat lam = lambda_.cast<cplx>().asDiagonal();
    std::vector<CMat> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_) {
      const CMat du = expm_frechet(s, g);
      const CMat t = du * lam * u.adjoint();
      out.push_back(t + t.adjoint());
    }
    return out;
  }

 private:
  void check(std::span<const double> w) const {
    if (w.size() != generators_.size()) {
      std::ostringstream os;
      os << "parameter count mismatch: got " << w.size() << ", expected " << generators_.size();
      throw std::invalid_argument(os.str());
    }
  }

  RVec lambda_;
  std::vector<CMat> generators_;
};

struct Observable {
  CMat matrix;
  int minus_count = 0;
  std::vector<double> params;
};

/// Throws unless `m` is Hermitian with spectrum in {+1,-1} and the given number of -1's.
inline void validate_dichotomic(const CMat& m, int expected_minus) {
  if (hermiticity_error(m) > 1e-12) throw std::runtime_error("observable is not Hermitian");
  const RVec ev = hermitian_eigenvalues(m);
  int minus = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i) - 1.0) > 1e-10 && std::abs(ev(i) + 1.0) > 1e-10)
      throw std::runtime_error("observable eigenvalue not within 1e-10 of +-1");
    if (ev(i) < 0) ++minus;
  }
  if (minus != expected_minus) throw std::runtime_error("observable -1 multiplicity differs from signature");
}

inline Observable build_observable(int n_minus, int d, std::span<const double> w,
                                   BasisKind kind = BasisKind::real_antisymmetric) {
  if (n_minus < 0 || n_minus > d) throw std::invalid_argument("build_observable: signature entry out of range");
  ObservableFamily fam(canonical_lambda(d, n_minus), skew_basis(d, kind));
  Observable o{fam(w), n_minus, std::vector<double>(w.begin(), w.end())};
  validate_dichotomic(o.matrix, n_minus);
  return o;
}

/// A joint parametrization of all observables of one site. Parameters are
/// concatenated family by family.
struct Ansatz {
  std::string label;
  std::vector<ObservableFamily> families;

  int dim() const { return families.empty() ? 0 : families.front().dim(); }

  std::size_t parameter_count() const {
    std::size_t n = 0;
    for (const auto& f : families) n += f.parameter_count();
    return n;
  }

  Signature signature() const {
    Signature s{dim(), {}};
    for (const auto& f : families) s.minus_counts.push_back(f.minus_count());
    return s;
  }

  std::vector<CMat> observables(std::span<const double> w) const {
    check(w);
    std::vector<CMat> out;
    std::size_t off = 0;
    for (const auto& f : families) {
      out.push_back(f(w.subspan(off, f.parameter_count())));
      off += f.parameter_count();
    }
    return out;
  }

  /// For each parameter: (index of the observable it moves, d sigma / d w).
  std::vector<std::pair<std::size_t, CMat>> derivatives(std::span<const double> w) const {
    check(w);
    std::vector<std::pair<std::size_t, CMat>> out;
    std::size_t off = 0;
    for (std::size_t a = 0; a < families.size(); ++a) {
      const auto& f = families[a];
      for (auto& m : f.derivatives(w.subspan(off, f.parameter_count()))) out.emplace_back(a, std::move(m));
      off += f.parameter_count();
    }
    return out;
  }

 private:
  void check(std::span<const double> w) const {
    if (w.size() != parameter_count()) {
      std::ostringstream os;
      os << "ansatz '" << label << "': parameter count mismatch (got " << w.size() << ", expected "
         << parameter_count() << ")";
      throw std::invalid_argument(os.str());
    }
  }
};

/// Every observable rotated by the full basis of the chosen kind around its canonical Lambda.
inline Ansatz general_ansatz(const Signature& sig, BasisKind kind = BasisKind::real_antisymmetric) {
  sig.validate();
  Ansatz a;
  a.label = "general" + sig.str() + (kind == BasisKind::full ? "/full" : "");
  for (int n : sig.minus_counts) a.families.emplace_back(canonical_lambda(sig.dim, n), skew_basis(sig.dim, kind));
  return a;
}

namespace detail {

inline RVec diag_of(std::initializer_list<double> v) {
  RVec r(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) r(i++) = x;
  return r;
}

/// Block rotations acting on the 2x2 blocks starting at the given offsets.
inline std::vector<CMat> block_rotations(int d, std::initializer_list<int> starts) {
  std::vector<CMat> out;
  for (int s : starts) out.push_back(rotation_generator(d, s, s + 1));
  return out;
}

// diag(Lambda, ..., Lambda, tail...) with `pairs` copies of Lambda = diag(1,-1).
inline RVec lambda_blocks(int pairs, std::initializer_list<double> tail) {
  RVec r(2 * pairs + static_cast<Eigen::Index>(tail.size()));
  for (int p = 0; p < pairs; ++p) {
    r(2 * p) = 1.0;
    r(2 * p + 1) = -1.0;
  }
  Eigen::Index i = 2 * pairs;
  for (double x : tail) r(i++) = x;
  return r;
}

// Two-setting Jordan-block form: sigma_x = diag(Lambda-blocks, tail),
// sigma_y = diag(B(w_1), ..., B(w_pairs), tail).
inline Ansatz jordan_pair(const std::string& label, int pairs, std::initializer_list<double> tail) {
  const int d = 2 * pairs + static_cast<int>(tail.size());
  std::vector<int> starts;
  for (int p = 0; p < pairs; ++p) starts.push_back(2 * p);
  std::vector<CMat> gens;
  for (int s : starts) gens.push_back(rotation_generator(d, s, s + 1));
  Ansatz a;
  a.label = label;
  a.families.emplace_back(lambda_blocks(pairs, tail), std::vector<CMat>{});
  a.families.emplace_back(lambda_blocks(pairs, tail), std::move(gens));
  return a;
}

}  // namespace detail

/// The block-structured observable classes used for the tabulated optima.
/// `variant` selects between the classes available for a (scenario, d).
inline Ansatz structured_ansatz(Scenario scenario, int d, int variant = 1) {
  using detail::diag_of;
  auto unknown = [&]() -> Ansatz {
    std::ostringstream os;
    os << "no structured observable class for scenario " << to_string(scenario) << ", d=" << d
       << ", variant " << variant;
    throw std::invalid_argument(os.str());
  };
  const std::string tag = to_string(scenario) + "/d" + std::to_string(d) + "/" + std::to_string(variant);

  auto pair222 = [&]() -> Ansatz {
    switch (d) {
      case 2: return detail::jordan_pair(tag, 1, {});
      case 3: return detail::jordan_pair(tag, 1, {-1.0});
      case 4: return detail::jordan_pair(tag, 2, {});
      case 5: return detail::jordan_pair(tag, 2, {1.0});
      case 6: return detail::jordan_pair(tag, 3, {});
      default: return unknown();
    }
  };

  if (scenario == Scenario::nn2) {
    if (variant != 1) return unknown();
    return pair222();
  }

  if (scenario == Scenario::nnn2) {
    if ((d == 2 || d == 4) && variant == 1) return pair222();
    if (d == 3 && variant == 1) {
      // sigma_x = diag(Lambda, 1), sigma_y = diag(B(w), -1)
      Ansatz a;
      a.label = tag;
      a.families.emplace_back(diag_of({1, -1, 1}), std::vector<CMat>{});
      a.families.emplace_back(diag_of({1, -1, -1}), detail::block_rotations(3, {0}));
      return a;
    }
    if (d == 3 && variant == 2) {
      // sigma_x = diag(1, Lambda), sigma_y = diag(1, B(w))
      Ansatz a;
      a.label = tag;
      a.families.emplace_back(diag_of({1, 1, -1}), std::vector<CMat>{});
      a.families.emplace_back(diag_of({1, 1, -1}), detail::block_rotations(3, {1}));
      return a;
    }
    if (d == 5 && variant == 1) return detail::jordan_pair(tag, 2, {1.0});
    if (d == 5 && variant == 2) return detail::jordan_pair(tag, 2, {-1.0});
    return unknown();
  }

  // 232
  if (d == 2 && variant == 1) {
    Ansatz a;
    a.label = tag;
    a.families.emplace_back(diag_of({-1, -1}), std::vector<CMat>{});
    a.families.emplace_back(diag_of({1, -1}), detail::block_rotations(2, {0}));
    a.families.emplace_back(diag_of({1, -1}), detail::block_rotations(2, {0}));
    return a;
  }
  auto triple = [&](RVec lx, RVec ly, RVec lz) {
    Ansatz a;
    a.label = tag;
    const auto basis = skew_basis(d, BasisKind::real_antisymmetric);
    a.families.emplace_back(std::move(lx), basis);
    a.families.emplace_back(std::move(ly), basis);
    a.families.emplace_back(std::move(lz), basis);
    return a;
  };
  if (d == 3) {
    if (variant == 1) return triple(diag_of({1, -1, -1}), diag_of({1, 1, -1}), diag_of({1, 1, -1}));
    if (variant == 2) return triple(diag_of({1, -1, -1}), diag_of({1, 1, -1}), diag_of({1, -1, -1}));
  }
  if (d == 4) {
    const RVec lam_minus_i = diag_of({1, -1, -1, -1});  // diag(Lambda, -I)
    const RVec i_lam = diag_of({1, 1, 1, -1});          // diag(I, Lambda)
    const RVec lam_lam = diag_of({1, -1, 1, -1});       // diag(Lambda, Lambda)
    switch (variant) {
      case 1: return triple(lam_minus_i, i_lam, i_lam);
      case 2: return triple(lam_minus_i, lam_lam, lam_minus_i);
      case 3: return triple(lam_minus_i, lam_lam, i_lam);
      case 4: return triple(lam_lam, i_lam, lam_lam);
      default: break;
    }
  }
  return unknown();
}

/// Observables of a structured class at parameters `w`.
inline std::vector<CMat> structured_pair(Scenario scenario, int d, int variant, std::span<const double> w) {
  return structured_ansatz(scenario, d, variant).observables(w);
}

/// The structured class whose signature matches `sig`, if one exists.
inline std::optional<Ansatz> structured_for_signature(Scenario scenario, const Signature& sig) {
  for (int variant = 1; variant <= 4; ++variant) {
    try {
      Ansatz a = structured_ansatz(scenario, sig.dim, variant);
      if (a.signature() == sig) return a;
    } catch (const std::invalid_argument&) {
    }
  }
  return std::nullopt;
}

}  // namespace ticontext
