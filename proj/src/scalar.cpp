#include "superteich/scalar.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "superteich/errors.hpp"

namespace superteich {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class pow10(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Rational {
    throw ParseError("malformed rational number '" + original + "'");
  };
  if (text.empty()) return fail();

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      auto exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) return fail();
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      auto int_part = mantissa.substr(0, dot);
      auto frac_part = mantissa.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) return fail();
      if ((!int_part.empty() && !all_digits(int_part)) ||
          (!frac_part.empty() && !all_digits(frac_part))) {
        return fail();
      }
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      if (!all_digits(mantissa)) return fail();
      digits = std::string(mantissa);
    }
    mpz_class n(digits, 10);
    if (exponent >= 0) {
      value = Rational(n * pow10(static_cast<unsigned long>(exponent)));
    } else {
      value = Rational(n, pow10(static_cast<unsigned long>(-exponent)));
      value.canonicalize();
    }
  }
  return negative ? Rational(-value) : value;
}

Rational ScalarTraits<Rational>::sqrt(const Rational& x) {
  if (sgn(x) < 0) throw AlgebraError("square root of a negative rational");
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    throw AlgebraError("square root of non-square rational " + x.get_str() +
                       " in exact mode");
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

Rational ScalarTraits<Rational>::log(const Rational& x) {
  if (x != 1) {
    throw AlgebraError("logarithm of " + x.get_str() + " is not rational; use float mode");
  }
  return Rational(0);
}

Rational ScalarTraits<Rational>::parse(std::string_view text) { return parse_rational(text); }

std::string ScalarTraits<Rational>::format(const Rational& x) { return x.get_str(); }

double ScalarTraits<double>::sqrt(double x) {
  if (x < 0) throw AlgebraError("square root of a negative number");
  return std::sqrt(x);
}

double ScalarTraits<double>::log(double x) {
  if (!(x > 0)) throw AlgebraError("logarithm of a non-positive number");
  return std::log(x);
}

double ScalarTraits<double>::parse(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_rational(text).get_d();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed number '" + std::string(text) + "'");
  }
  return value;
}

std::string ScalarTraits<double>::format(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace superteich
