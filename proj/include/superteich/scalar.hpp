#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superteich {

using Rational = mpq_class;

enum class ScalarMode { Rational, Float };

// Per-scalar-type behaviour used by the Grassmann algebra. Exact scalars
// refuse operations whose result would be irrational.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr ScalarMode mode = ScalarMode::Rational;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static int sign(const Rational& x) { return sgn(x); }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  // Throws AlgebraError unless x is the square of a rational.
  static Rational sqrt(const Rational& x);
  // Only log(1) = 0 is rational.
  static Rational log(const Rational& x);
  static Rational parse(std::string_view text);
  static std::string format(const Rational& x);
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr ScalarMode mode = ScalarMode::Float;
  static bool is_zero(double x) { return x == 0.0; }
  static int sign(double x) { return (x > 0) - (x < 0); }
  static double abs(double x) { return x < 0 ? -x : x; }
  static double to_double(double x) { return x; }
  static double sqrt(double x);
  static double log(double x);
  static double parse(std::string_view text);
  // Shortest representation that round-trips.
  static std::string format(double x);
};

// Parses "-3/4", "2.5", "1e-3" into an exact rational.
Rational parse_rational(std::string_view text);

}  // namespace superteich
