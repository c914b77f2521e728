#include <doctest.h>

#include <cmath>
#include <random>

#include "superteich/errors.hpp"
#include "superteich/grassmann.hpp"
#include "test_support.hpp"

using namespace superteich;
using superteich::testing::gexp;
using superteich::testing::naive_product;

namespace {

RationalElement q(unsigned n, const char* text) { return parse_grassmann<Rational>(text, n); }

template <class S>
S random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  if constexpr (std::is_same_v<S, Rational>) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  } else {
    return std::uniform_real_distribution<double>(-1, 1)(rng);
  }
}

// parity: 0 even, 1 odd, -1 anything
template <class S>
Grassmann<S> random_element(unsigned n, std::mt19937_64& rng, int parity, int max_terms = 5) {
  typename Grassmann<S>::Terms terms;
  std::uniform_int_distribution<Monomial> mono(0, (Monomial{1} << n) - 1);
  const int count = std::uniform_int_distribution<int>(0, max_terms)(rng);
  for (int i = 0; i < count; ++i) {
    const Monomial m = mono(rng);
    if (parity >= 0 && monomial_degree(m) % 2 != parity) continue;
    terms[m] += random_scalar<S>(rng);
  }
  return Grassmann<S>::from_terms(n, terms);
}

}  // namespace

TEST_CASE("generator products follow the sign rule") {
  const auto t1 = RationalElement::generator(3, 1);
  const auto t2 = RationalElement::generator(3, 2);
  CHECK((t1 * t1).is_zero());
  CHECK(t1 * t2 == q(3, "1*t1^t2"));
  CHECK(t2 * t1 == q(3, "-1*t1^t2"));
  CHECK(q(3, "1 + t1^t2") * q(3, "1 - t1^t2") == RationalElement(3, 1));
}

TEST_CASE("monomial sign matches inversion counting") {
  CHECK(monomial_product_sign(0b010, 0b001) == -1);
  CHECK(monomial_product_sign(0b001, 0b010) == 1);
  CHECK(monomial_product_sign(0b011, 0b010) == 0);
  // {1,3} * {0,2}: pairs (1,0), (3,0), (3,2) are inversions
  CHECK(monomial_product_sign(0b1010, 0b0101) == -1);
}

TEST_CASE("gmul agrees with the index-list oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const unsigned n = 1 + rng() % 10;
    const auto x = random_element<Rational>(n, rng, -1, 8);
    const auto y = random_element<Rational>(n, rng, -1, 8);
    REQUIRE(gmul(x, y) == naive_product(x, y));
  }
}

TEST_CASE("mismatched algebras are rejected") {
  CHECK_THROWS_AS(RationalElement(2, 1) * RationalElement(3, 1), AlgebraError);
  CHECK_THROWS_AS(RationalElement(2, 1) + RationalElement(3, 1), AlgebraError);
  CHECK_THROWS_AS(RationalElement::generator(2, 2), AlgebraError);
  CHECK_THROWS_AS(RationalElement::from_terms(2, {{0b100, Rational(1)}}), AlgebraError);
}

TEST_CASE("canonical form drops zero coefficients") {
  const auto t0 = RationalElement::generator(2, 0);
  CHECK((t0 - t0).is_zero());
  CHECK(RationalElement::from_terms(2, {{0b01, Rational(0)}}).is_zero());
  CHECK((t0 * Rational(0)).terms().empty());
  Rational unreduced;
  unreduced.get_num() = 6;
  unreduced.get_den() = 4;
  CHECK(RationalElement(2, unreduced) == RationalElement(2, Rational(3, 2)));
}

TEST_CASE("parity classification") {
  CHECK(RationalElement(2).parity() == Parity::Zero);
  CHECK(q(3, "2 + t0^t1").parity() == Parity::Even);
  CHECK(q(3, "t0 + 3*t0^t1^t2").parity() == Parity::Odd);
  CHECK(q(3, "1 + t0").parity() == Parity::Mixed);
  CHECK(RationalElement(2).is_even());
  CHECK(RationalElement(2).is_odd());
}

TEST_CASE("ginv examples and errors") {
  CHECK(ginv(RationalElement(2, 2)) == RationalElement(2, Rational(1, 2)));
  CHECK(ginv(q(3, "1 + t1^t2")) == q(3, "1 - t1^t2"));
  CHECK_THROWS_AS(ginv(RationalElement::generator(3, 1)), AlgebraError);
  CHECK_THROWS_AS(ginv(q(3, "t0^t1")), AlgebraError);
  CHECK_THROWS_AS(ginv(q(3, "1 + t0")), AlgebraError);
}

TEST_CASE("gsqrt examples and errors") {
  CHECK(gsqrt(RationalElement(2, Rational(9, 16))) == RationalElement(2, Rational(3, 4)));
  CHECK(gsqrt(q(3, "4 + 4*t1^t2")) == q(3, "2 + t1^t2"));
  CHECK_THROWS_AS(gsqrt(RationalElement(2, 2)), AlgebraError);
  CHECK_THROWS_AS(gsqrt(RationalElement(2, -4)), AlgebraError);
  CHECK_THROWS_AS(gsqrt(RationalElement(2, 0)), AlgebraError);
  CHECK_THROWS_AS(gsqrt(RationalElement::generator(2, 0)), AlgebraError);
  CHECK(std::abs(gsqrt(FloatElement(2, 2.0)).body() - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("glog examples and errors") {
  CHECK(glog(RationalElement(2, 1)).is_zero());
  CHECK(glog(q(3, "1 + t1^t2")) == q(3, "t1^t2"));
  CHECK(std::abs(glog(FloatElement(1, std::exp(1.0))).body() - 1.0) < 1e-12);
  CHECK_THROWS_AS(glog(RationalElement(2, 2)), AlgebraError);
  CHECK_THROWS_AS(glog(FloatElement(2, -1.0)), AlgebraError);
  CHECK_THROWS_AS(glog(FloatElement(2, 0.0)), AlgebraError);
}

TEST_CASE("algebra properties on random elements") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const unsigned n = 1 + rng() % 10;
    const auto x = random_element<Rational>(n, rng, -1);
    const auto y = random_element<Rational>(n, rng, -1);
    const auto z = random_element<Rational>(n, rng, -1);
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE((x + y) * z == x * z + y * z);

    const auto odd1 = random_element<Rational>(n, rng, 1);
    const auto odd2 = random_element<Rational>(n, rng, 1);
    REQUIRE(odd1 * odd2 == -(odd2 * odd1));
    REQUIRE((odd1 * odd1).is_zero());

    const auto even = random_element<Rational>(n, rng, 0);
    const auto product = even * odd1;
    REQUIRE((product.is_zero() || product.parity() == Parity::Odd));
    REQUIRE(((odd1 * odd2).is_zero() || (odd1 * odd2).parity() == Parity::Even));

    auto unit = random_element<Rational>(n, rng, 0).soul();
    unit += RationalElement(n, Rational(1 + rng() % 7));
    REQUIRE(unit * ginv(unit) == RationalElement(n, 1));
    REQUIRE(ginv(unit) * unit == RationalElement(n, 1));
  }
}

TEST_CASE("square roots round trip") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const unsigned n = 1 + rng() % 10;
    auto root = random_element<Rational>(n, rng, 0).soul();
    root += RationalElement(n, Rational(1 + rng() % 5, 1 + rng() % 3));
    REQUIRE(gsqrt(root * root) == root);

    auto x = random_element<Rational>(n, rng, 0).soul();
    x += RationalElement(n, Rational(4));
    const auto s = gsqrt(x);
    REQUIRE(s * s == x);
    REQUIRE(s.body() > 0);
  }
}

TEST_CASE("float log inverts the exponential series") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const unsigned n = 1 + rng() % 10;
    auto x = random_element<double>(n, rng, 0).soul();
    x += FloatElement(n, 0.5 + 2.5 * std::uniform_real_distribution<double>()(rng));
    REQUIRE(max_abs_difference(gexp(glog(x)), x) <= 1e-12);
    REQUIRE(max_abs_difference(glog(gexp(x)), x) <= 1e-12);
  }
}

TEST_CASE("even soul is nilpotent of order floor(N/2) + 1") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const unsigned n = 1 + rng() % 8;
    auto x = random_element<Rational>(n, rng, 0, 12);
    auto power = RationalElement(n, 1);
    for (unsigned k = 0; k < n / 2 + 1; ++k) power = power * x.soul();
    REQUIRE(power.is_zero());
  }
}

TEST_CASE("text format round trips") {
  CHECK(to_string(q(3, "1 + 2*t0^t1")) == "1 + 2*t0^t1");
  CHECK(to_string(RationalElement(3)) == "0");
  CHECK(q(3, "t1^t0") == q(3, "-1*t0^t1"));
  CHECK(q(3, "1 + t0^t0").terms().size() == 1);
  CHECK(q(3, "1/2*t0 - t2") == RationalElement::generator(3, 0) * Rational(1, 2) -
                                    RationalElement::generator(3, 2));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_element<Rational>(6, rng, -1, 8);
    REQUIRE(parse_grassmann<Rational>(to_string(x), 6) == x);
    const auto y = random_element<double>(6, rng, -1, 8);
    REQUIRE(parse_grassmann<double>(to_string(y), 6) == y);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_grassmann<Rational>("t5", 3), ParseError);
  CHECK_THROWS_AS(parse_grassmann<Rational>("1 +", 3), ParseError);
  CHECK_THROWS_AS(parse_grassmann<Rational>("abc", 3), ParseError);
  CHECK_THROWS_AS(parse_grassmann<Rational>("1/0", 3), ParseError);
}
