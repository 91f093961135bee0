#pragma once

// Bell functionals on the chain and the translation-invariant Hamiltonians built from them.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ticontext/catalog_data.hpp"
#include "ticontext/linalg.hpp"
#include "ticontext/rational.hpp"
#include "ticontext/scenario.hpp"

namespace ticontext {

inline char setting_name(int a) { return "xyz"[a]; }

/// Linear functional on one-body, nearest-neighbour and (322 only)
/// next-nearest-neighbour correlators, with exact rational couplings.
struct BellFunctional {
  std::string id;
  Scenario scenario = Scenario::nn2;
  std::vector<Rational> one;               ///< J_a
  std::vector<std::vector<Rational>> nn;   ///< J_ab, sites (i, i+1)
  std::vector<std::vector<Rational>> nnn;  ///< J^AC_ab, sites (i, i+2); empty unless 322
  std::optional<Rational> classical_bound;

  int settings() const { return settings_per_site(scenario); }

  static BellFunctional zero(Scenario s, std::string id = "zero") {
    BellFunctional f;
    f.id = std::move(id);
    f.scenario = s;
    const auto x = static_cast<std::size_t>(settings_per_site(s));
    f.one.assign(x, Rational(0));
    f.nn.assign(x, std::vector<Rational>(x, Rational(0)));
    if (s == Scenario::nnn2) f.nnn.assign(x, std::vector<Rational>(x, Rational(0)));
    return f;
  }

  /// Throws if the coupling slots do not match the scenario.
  void validate() const {
    const auto x = static_cast<std::size_t>(settings());
    auto square = [x](const std::vector<std::vector<Rational>>& m) {
      if (m.size() != x) return false;
      for (const auto& r : m)
        if (r.size() != x) return false;
      return true;
    };
    if (one.size() != x || !square(nn)) throw std::invalid_argument("functional '" + id + "': coupling slots do not match scenario");
    if (scenario == Scenario::nnn2 ? !square(nnn) : !nnn.empty())
      throw std::invalid_argument("functional '" + id + "': next-nearest couplings only belong to 322");
    if (classical_bound && classical_bound->get_den() != 1)
      throw std::invalid_argument("functional '" + id + "': classical bound must be an integer");
  }

  BellFunctional scaled(const Rational& c) const {
    BellFunctional g = *this;
    for (auto& v : g.one) v *= c;
    for (auto& r : g.nn)
      for (auto& v : r) v *= c;
    for (auto& r : g.nnn)
      for (auto& v : r) v *= c;
    if (g.classical_bound) {
      *g.classical_bound *= c;
      if (g.classical_bound->get_den() != 1) g.classical_bound.reset();
    }
    return g;
  }

  /// Sum of |J| over all slots, a crude Lipschitz-type scale.
  double coupling_norm() const {
    double s = 0;
    for (const auto& v : one) s += std::abs(to_double(v));
    for (const auto& r : nn)
      for (const auto& v : r) s += std::abs(to_double(v));
    for (const auto& r : nnn)
      for (const auto& v : r) s += std::abs(to_double(v));
    return s;
  }
};

namespace detail {

inline Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d != static_cast<double>(static_cast<long>(d)))
      throw std::invalid_argument("non-integer couplings must be given as \"p/q\" strings");
    return Rational(static_cast<long>(d));
  }
  throw std::invalid_argument("coupling value is not a number");
}

inline nlohmann::json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

}  // namespace detail

inline BellFunctional functional_from_json(const nlohmann::json& j) {
  BellFunctional f = BellFunctional::zero(parse_scenario(j.at("scenario").get<std::string>()),
                                          j.value("id", std::string("custom")));
  const int x = f.settings();
  std::map<std::string, Rational*> slots;
  for (int a = 0; a < x; ++a) {
    slots[std::string("J") + setting_name(a)] = &f.one[static_cast<std::size_t>(a)];
    for (int b = 0; b < x; ++b) {
      const std::string ab{setting_name(a), setting_name(b)};
      slots["J" + ab] = &f.nn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (f.scenario == Scenario::nnn2) slots["JAC" + ab] = &f.nnn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
  }
  for (const auto& [key, value] : j.at("couplings").items()) {
    auto it = slots.find(key);
    if (it == slots.end()) throw std::invalid_argument("coupling '" + key + "' does not exist in scenario " + to_string(f.scenario));
    *it->second = detail::json_rational(value);
  }
  if (j.contains("classical_bound") && !j.at("classical_bound").is_null())
    f.classical_bound = detail::json_rational(j.at("classical_bound"));
  f.validate();
  return f;
}

inline nlohmann::json functional_to_json(const BellFunctional& f) {
  nlohmann::json c = nlohmann::json::object();
  const int x = f.settings();
  for (int a = 0; a < x; ++a) c[std::string("J") + setting_name(a)] = detail::rational_json(f.one[static_cast<std::size_t>(a)]);
  for (int a = 0; a < x; ++a)
    for (int b = 0; b < x; ++b)
      c[std::string("J") + setting_name(a) + setting_name(b)] =
          detail::rational_json(f.nn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
  if (f.scenario == Scenario::nnn2)
    for (int a = 0; a < x; ++a)
      for (int b = 0; b < x; ++b)
        c[std::string("JAC") + setting_name(a) + setting_name(b)] =
            detail::rational_json(f.nnn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
  nlohmann::json j{{"id", f.id}, {"scenario", to_string(f.scenario)}, {"couplings", c}};
  j["classical_bound"] = f.classical_bound ? detail::rational_json(*f.classical_bound) : nlohmann::json();
  return j;
}

inline BellFunctional load_functional_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open functional file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("functional file '" + path + "': " + e.what());
  }
  if (!j.contains("id")) j["id"] = path;
  return functional_from_json(j);
}

// ---------------------------------------------------------------------------
// catalog

inline const nlohmann::json& catalog_json() {
  static const nlohmann::json j = nlohmann::json::parse(detail::kCatalogJson);
  return j;
}

inline std::string catalog_version() { return catalog_json().at("catalog_version").get<std::string>(); }

inline const std::vector<BellFunctional>& catalog() {
  static const std::vector<BellFunctional> all = [] {
    std::vector<BellFunctional> out;
    for (const auto& e : catalog_json().at("functionals")) out.push_back(functional_from_json(e));
    return out;
  }();
  return all;
}

/// Reference values stored alongside a catalog entry (tabulated optima and bounds).
inline const nlohmann::json& catalog_reference(const std::string& id) {
  for (const auto& e : catalog_json().at("functionals"))
    if (e.at("id") == id) return e.at("reference");
  throw std::invalid_argument("no catalog entry '" + id + "'");
}

inline const BellFunctional& catalog_entry(const std::string& id) {
  for (const auto& f : catalog())
    if (f.id == id) return f;
  throw std::invalid_argument("no catalog entry '" + id + "'");
}

/// Catalog id ("322/5") or path to a functional JSON file.
inline BellFunctional resolve_functional(const std::string& selector) {
  for (const auto& f : catalog())
    if (f.id == selector) return f;
  std::ifstream probe(selector);
  if (probe) return load_functional_file(selector);
  throw std::invalid_argument("'" + selector + "' is neither a catalog id nor a readable file");
}

// ---------------------------------------------------------------------------
// local terms

/// h on d^2 (222/232) or d^3 (322). One-body terms sit on the leftmost site.
inline CMat local_term(const BellFunctional& f, const std::vector<CMat>& obs) {
  const int x = f.settings();
  if (static_cast<int>(obs.size()) != x)
    throw std::invalid_argument("local_term: expected " + std::to_string(x) + " observables, got " + std::to_string(obs.size()));
  const Eigen::Index d = obs.front().rows();
  for (const auto& o : obs)
    if (o.rows() != d || o.cols() != d) throw std::invalid_argument("local_term: observable dimension mismatch");
  const CMat id = identity(d);
  const bool three = f.scenario == Scenario::nnn2;
  const Eigen::Index n = three ? d * d * d : d * d;
  CMat h = CMat::Zero(n, n);
  for (int a = 0; a < x; ++a) {
    const double ja = to_double(f.one[static_cast<std::size_t>(a)]);
    if (ja != 0) h += ja * (three ? kron(obs[a], id, id) : kron(obs[a], id));
    for (int b = 0; b < x; ++b) {
      const double jab = to_double(f.nn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
      if (jab != 0) h += jab * (three ? kron(obs[a], obs[b], id) : kron(obs[a], obs[b]));
      if (three) {
        const double jac = to_double(f.nnn[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        if (jac != 0) h += jac * kron(obs[a], id, obs[b]);
      }
    }
  }
  return h;
}

/// Blocks pairs of sites: a three-site term on dimension d becomes a
/// nearest-neighbour term on dimension d^2 whose energy per block is twice the
/// energy per original site.
inline CMat block_nnn(const CMat& h3, Eigen::Index d) {
  if (h3.rows() != d * d * d || h3.cols() != d * d * d) throw std::invalid_argument("block_nnn: h3 must be d^3 x d^3");
  const CMat id = identity(d);
  return kron(h3, id) + kron(id, h3);
}

/// Local term fed to the two-site engine, and the factor dividing its energy.
struct EngineTerm {
  CMat h;
  Eigen::Index dim = 0;  ///< local dimension of the engine chain
  double energy_scale = 1.0;
};

inline EngineTerm engine_term(const BellFunctional& f, const std::vector<CMat>& obs) {
  const Eigen::Index d = obs.front().rows();
  CMat h = local_term(f, obs);
  if (f.scenario == Scenario::nnn2) return {block_nnn(h, d), d * d, 0.5};
  return {std::move(h), d, 1.0};
}

// ---------------------------------------------------------------------------
// evaluation on correlators

/// Moments <s_a>, <s_a^i s_b^{i+1}>, <s_a^i s_b^{i+2}>. Empty tables mean "not supplied".
template <class T>
struct Correlators {
  std::vector<T> one;
  std::vector<std::vector<T>> nn;
  std::vector<std::vector<T>> nnn;
};

template <class T>
T evaluate(const BellFunctional& f, const Correlators<T>& c) {
  const auto x = static_cast<std::size_t>(f.settings());
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("evaluate: missing ") + what + " moments");
  };
  need(c.one.size() == x, "one-body");
  need(c.nn.size() == x, "nearest-neighbour");
  if (f.scenario == Scenario::nnn2) need(c.nnn.size() == x, "next-nearest-neighbour");
  T v = T(0);
  auto conv = [](const Rational& q) {
    if constexpr (std::is_same_v<T, Rational>)
      return q;
    else
      return static_cast<T>(to_double(q));
  };
  for (std::size_t a = 0; a < x; ++a) {
    v += conv(f.one[a]) * c.one[a];
    need(c.nn[a].size() == x, "nearest-neighbour");
    for (std::size_t b = 0; b < x; ++b) v += conv(f.nn[a][b]) * c.nn[a][b];
    if (f.scenario == Scenario::nnn2) {
      need(c.nnn[a].size() == x, "next-nearest-neighbour");
      for (std::size_t b = 0; b < x; ++b) v += conv(f.nnn[a][b]) * c.nnn[a][b];
    }
  }
  return v;
}

}  // namespace ticontext
