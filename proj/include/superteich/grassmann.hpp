#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "superteich/scalar.hpp"

namespace superteich {

// A monomial t_{i1} t_{i2} ... t_{ik} with i1 < i2 < ... < ik, stored as the
// bitmask of its generator indices.
using Monomial = std::uint64_t;

inline constexpr unsigned kMaxGenerators = 64;

enum class Parity { Zero, Even, Odd, Mixed };

// Sign of e_S * e_T relative to e_{S|T}: (-1)^#{(i,j) : i in S, j in T, i > j}.
// Returns 0 when S and T share a generator.
int monomial_product_sign(Monomial s, Monomial t);

inline int monomial_degree(Monomial m) { return __builtin_popcountll(m); }

// An element of the real Grassmann algebra on N anticommuting generators,
// kept in canonical sparse form: no stored coefficient is zero and every
// monomial only uses generators below N. Values are immutable in practice;
// all algebra is through free functions and operators returning new values.
template <class S>
class Grassmann {
 public:
  using Scalar = S;
  using Terms = std::map<Monomial, S>;

  explicit Grassmann(unsigned num_generators = 0);
  Grassmann(unsigned num_generators, const S& body);

  static Grassmann generator(unsigned num_generators, unsigned index);
  // Zero coefficients are dropped; monomials outside [0, N) throw.
  static Grassmann from_terms(unsigned num_generators, Terms terms);

  unsigned num_generators() const { return num_generators_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S body() const;
  Grassmann soul() const;
  S coefficient(Monomial m) const;
  Parity parity() const;
  bool is_even() const;
  bool is_odd() const;

  Grassmann& operator+=(const Grassmann& other);
  Grassmann& operator-=(const Grassmann& other);
  Grassmann& operator*=(const S& scalar);

  friend bool operator==(const Grassmann& a, const Grassmann& b) {
    return a.num_generators_ == b.num_generators_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(Monomial m, const S& coefficient);

  unsigned num_generators_;
  Terms terms_;
};

template <class S>
Grassmann<S> operator+(Grassmann<S> a, const Grassmann<S>& b) {
  a += b;
  return a;
}
template <class S>
Grassmann<S> operator-(Grassmann<S> a, const Grassmann<S>& b) {
  a -= b;
  return a;
}
template <class S>
Grassmann<S> operator-(Grassmann<S> a) {
  a *= S(-1);
  return a;
}
template <class S>
Grassmann<S> operator*(Grassmann<S> a, const S& scalar) {
  a *= scalar;
  return a;
}
template <class S>
Grassmann<S> operator*(const S& scalar, Grassmann<S> a) {
  a *= scalar;
  return a;
}

// Exterior product. Throws AlgebraError when the generator counts differ.
template <class S>
Grassmann<S> gmul(const Grassmann<S>& x, const Grassmann<S>& y);

template <class S>
Grassmann<S> operator*(const Grassmann<S>& x, const Grassmann<S>& y) {
  return gmul(x, y);
}

// The nilpotent-aware inverse, square root and logarithm. Each expands a
// power series in soul/body and stops when the power of the soul vanishes,
// which happens after at most N/2 + 1 steps for even inputs.
template <class S>
Grassmann<S> ginv(const Grassmann<S>& x);
template <class S>
Grassmann<S> gsqrt(const Grassmann<S>& x);
template <class S>
Grassmann<S> glog(const Grassmann<S>& x);

// Largest coefficientwise absolute difference.
template <class S>
double max_abs_difference(const Grassmann<S>& x, const Grassmann<S>& y);

// Exact equality for exact scalars; coefficientwise |x - y| <= tol otherwise.
template <class S>
bool approx_equal(const Grassmann<S>& x, const Grassmann<S>& y, double tol);

// Renders terms in ascending bitmask order, e.g. "1 + 2*t0^t1 - 1/2*t3".
template <class S>
std::string to_string(const Grassmann<S>& x);

// Accepts the grammar produced by to_string, plus bare monomials ("t0^t2"),
// unit-free signs ("-t1") and unsorted generator lists ("t2^t0" = -t0^t2).
template <class S>
Grassmann<S> parse_grassmann(std::string_view text, unsigned num_generators);

using RationalElement = Grassmann<Rational>;
using FloatElement = Grassmann<double>;

}  // namespace superteich
