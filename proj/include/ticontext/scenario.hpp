#pragma once

#include <stdexcept>
#include <string>

namespace ticontext {

/// Bell scenarios on the chain, named (interaction range, settings, outcomes).
enum class Scenario {
  nn2,   ///< "222": nearest neighbour, two dichotomic settings per site
  nnn2,  ///< "322": up to next-nearest neighbour, two settings
  nn3,   ///< "232": nearest neighbour, three settings
};

inline int settings_per_site(Scenario s) { return s == Scenario::nn3 ? 3 : 2; }

/// Number of consecutive sites a local term acts on.
inline int window_size(Scenario s) { return s == Scenario::nnn2 ? 3 : 2; }

inline std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::nn2: return "222";
    case Scenario::nnn2: return "322";
    case Scenario::nn3: return "232";
  }
  return "?";
}

inline Scenario parse_scenario(const std::string& tag) {
  if (tag == "222") return Scenario::nn2;
  if (tag == "322") return Scenario::nnn2;
  if (tag == "232") return Scenario::nn3;
  throw std::invalid_argument("unknown scenario '" + tag + "' (expected 222, 322 or 232)");
}

}  // namespace ticontext
