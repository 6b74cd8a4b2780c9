#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace distk {

/// Exact arbitrary-precision rational. Arithmetic results are canonical;
/// the (num, den) constructor is not, so formatting canonicalizes a copy.
using Rational = mpq_class;

/// Lowest terms "num/den" with den > 0, also for integers ("4/1").
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Accepts "num/den" or a plain integer.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

/// Harmonic number H_n = 1 + 1/2 + ... + 1/n (H_0 = 0).
inline Rational harmonic(std::size_t n) {
  Rational h = 0;
  for (std::size_t i = 1; i <= n; ++i) h += Rational(1, static_cast<unsigned long>(i));
  return h;
}

}  // namespace distk
