#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ticontext {

/// Exact rational number; canonicalized after every operation.
using Rational = mpq_class;

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact conversion of a binary double (every finite double is a dyadic rational).
inline Rational from_double(double v) { return Rational(v); }

}  // namespace ticontext
