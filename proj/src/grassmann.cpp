#include "superteich/grassmann.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <vector>

#include "superteich/errors.hpp"

namespace superteich {

int monomial_product_sign(Monomial s, Monomial t) {
  if (s & t) return 0;
  int inversions = 0;
  while (t) {
    const int j = __builtin_ctzll(t);
    t &= t - 1;
    // Generators of S with index above j each pass over t_j once.
    const Monomial above = j >= 63 ? Monomial{0} : (s >> (j + 1));
    inversions += __builtin_popcountll(above);
  }
  return (inversions & 1) ? -1 : 1;
}

template <class S>
Grassmann<S>::Grassmann(unsigned num_generators) : num_generators_(num_generators) {
  if (num_generators > kMaxGenerators) {
    throw AlgebraError("at most 64 generators are supported");
  }
}

template <class S>
Grassmann<S>::Grassmann(unsigned num_generators, const S& body) : Grassmann(num_generators) {
  add_term(0, body);
}

template <class S>
Grassmann<S> Grassmann<S>::generator(unsigned num_generators, unsigned index) {
  if (index >= num_generators) {
    throw AlgebraError("generator index " + std::to_string(index) + " out of range");
  }
  Grassmann g(num_generators);
  g.add_term(Monomial{1} << index, S(1));
  return g;
}

template <class S>
Grassmann<S> Grassmann<S>::from_terms(unsigned num_generators, Terms terms) {
  Grassmann g(num_generators);
  const Monomial allowed =
      num_generators >= 64 ? ~Monomial{0} : ((Monomial{1} << num_generators) - 1);
  for (auto& [m, c] : terms) {
    if (m & ~allowed) throw AlgebraError("monomial uses a generator outside the algebra");
    g.add_term(m, c);
  }
  return g;
}

template <class S>
void Grassmann<S>::add_term(Monomial m, const S& coefficient) {
  if (ScalarTraits<S>::is_zero(coefficient)) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if constexpr (ScalarTraits<S>::exact) {
    // values built from (num, den) may arrive unreduced; equality needs lowest terms
    if (inserted) it->second.canonicalize();
  }
  if (!inserted) {
    it->second += coefficient;
    if (ScalarTraits<S>::is_zero(it->second)) terms_.erase(it);
  }
}

template <class S>
S Grassmann<S>::body() const {
  return coefficient(0);
}

template <class S>
S Grassmann<S>::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? S(0) : it->second;
}

template <class S>
Grassmann<S> Grassmann<S>::soul() const {
  Grassmann s = *this;
  s.terms_.erase(0);
  return s;
}

template <class S>
Parity Grassmann<S>::parity() const {
  bool even = false, odd = false;
  for (const auto& [m, c] : terms_) {
    (monomial_degree(m) % 2 ? odd : even) = true;
  }
  if (even && odd) return Parity::Mixed;
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return Parity::Zero;
}

template <class S>
bool Grassmann<S>::is_even() const {
  auto p = parity();
  return p == Parity::Even || p == Parity::Zero;
}

template <class S>
bool Grassmann<S>::is_odd() const {
  auto p = parity();
  return p == Parity::Odd || p == Parity::Zero;
}

template <class S>
Grassmann<S>& Grassmann<S>::operator+=(const Grassmann& other) {
  if (other.num_generators_ != num_generators_) {
    throw AlgebraError("elements belong to algebras of different sizes");
  }
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

template <class S>
Grassmann<S>& Grassmann<S>::operator-=(const Grassmann& other) {
  if (other.num_generators_ != num_generators_) {
    throw AlgebraError("elements belong to algebras of different sizes");
  }
  for (const auto& [m, c] : other.terms_) add_term(m, S(-c));
  return *this;
}

template <class S>
Grassmann<S>& Grassmann<S>::operator*=(const S& scalar) {
  if (ScalarTraits<S>::is_zero(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    // Float underflow can produce an exact zero.
    if (ScalarTraits<S>::is_zero(it->second)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

template <class S>
Grassmann<S> gmul(const Grassmann<S>& x, const Grassmann<S>& y) {
  if (x.num_generators() != y.num_generators()) {
    throw AlgebraError("elements belong to algebras of different sizes");
  }
  typename Grassmann<S>::Terms acc;
  for (const auto& [s, a] : x.terms()) {
    for (const auto& [t, b] : y.terms()) {
      const int sign = monomial_product_sign(s, t);
      if (sign == 0) continue;
      S product = a * b;
      if (sign < 0) product = -product;
      auto [it, inserted] = acc.try_emplace(s | t, product);
      if (!inserted) it->second += product;
    }
  }
  return Grassmann<S>::from_terms(x.num_generators(), std::move(acc));
}

namespace {

// body * sum_k coeff(k) * (soul/body)^k, truncated when the power vanishes.
template <class S>
Grassmann<S> soul_series(const Grassmann<S>& x, const S& leading,
                         const std::function<S(unsigned, const S&)>& next_coeff) {
  const S b = x.body();
  Grassmann<S> u = x.soul();
  u *= S(S(1) / b);
  Grassmann<S> result(x.num_generators(), leading);
  Grassmann<S> power(x.num_generators(), S(1));
  S c = S(1);
  for (unsigned k = 1;; ++k) {
    power = gmul(power, u);
    if (power.is_zero()) break;
    c = next_coeff(k, c);
    Grassmann<S> term = power;
    term *= S(c * leading);
    result += term;
  }
  return result;
}

template <class S>
void require_even(const Grassmann<S>& x, const char* op) {
  if (!x.is_even()) throw AlgebraError(std::string(op) + " requires an even element");
}

}  // namespace

template <class S>
Grassmann<S> ginv(const Grassmann<S>& x) {
  if (ScalarTraits<S>::is_zero(x.body())) {
    throw AlgebraError("element with zero body is not invertible");
  }
  require_even(x, "ginv");
  const S b = x.body();
  // (1/b) * sum (-u)^k
  return soul_series<S>(x, S(S(1) / b), [](unsigned, const S& prev) { return S(-prev); });
}

template <class S>
Grassmann<S> gsqrt(const Grassmann<S>& x) {
  require_even(x, "gsqrt");
  const S b = x.body();
  if (ScalarTraits<S>::sign(b) <= 0) throw AlgebraError("gsqrt requires a positive body");
  const S root = ScalarTraits<S>::sqrt(b);
  // binom(1/2, k) = binom(1/2, k-1) * (1/2 - (k-1)) / k
  return soul_series<S>(x, root, [](unsigned k, const S& prev) {
    const S half = S(1) / S(2);
    return S(prev * (half - S(k - 1)) / S(k));
  });
}

template <class S>
Grassmann<S> glog(const Grassmann<S>& x) {
  require_even(x, "glog");
  const S b = x.body();
  if (ScalarTraits<S>::sign(b) <= 0) throw AlgebraError("glog requires a positive body");
  const S log_body = ScalarTraits<S>::log(b);

  Grassmann<S> u = x.soul();
  u *= S(S(1) / b);
  Grassmann<S> result(x.num_generators(), log_body);
  Grassmann<S> power(x.num_generators(), S(1));
  for (unsigned k = 1;; ++k) {
    power = gmul(power, u);
    if (power.is_zero()) break;
    Grassmann<S> term = power;
    S c = S(1) / S(k);
    if (k % 2 == 0) c = -c;
    term *= c;
    result += term;
  }
  return result;
}

template <class S>
double max_abs_difference(const Grassmann<S>& x, const Grassmann<S>& y) {
  double worst = 0;
  auto ix = x.terms().begin(), iy = y.terms().begin();
  while (ix != x.terms().end() || iy != y.terms().end()) {
    double diff;
    if (iy == y.terms().end() || (ix != x.terms().end() && ix->first < iy->first)) {
      diff = ScalarTraits<S>::to_double(ix->second);
      ++ix;
    } else if (ix == x.terms().end() || iy->first < ix->first) {
      diff = ScalarTraits<S>::to_double(iy->second);
      ++iy;
    } else {
      diff = ScalarTraits<S>::to_double(S(ix->second - iy->second));
      ++ix;
      ++iy;
    }
    worst = std::max(worst, diff < 0 ? -diff : diff);
  }
  return worst;
}

template <class S>
bool approx_equal(const Grassmann<S>& x, const Grassmann<S>& y, double tol) {
  if (x.num_generators() != y.num_generators()) return false;
  if constexpr (ScalarTraits<S>::exact) {
    (void)tol;
    return x == y;
  } else {
    return max_abs_difference(x, y) <= tol;
  }
}

template <class S>
std::string to_string(const Grassmann<S>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool negative = ScalarTraits<S>::sign(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += ScalarTraits<S>::format(ScalarTraits<S>::abs(c));
    if (m == 0) continue;
    out += "*";
    bool first_gen = true;
    for (Monomial rest = m; rest; rest &= rest - 1) {
      if (!first_gen) out += "^";
      first_gen = false;
      out += "t" + std::to_string(__builtin_ctzll(rest));
    }
  }
  return out;
}

namespace {

class ExpressionReader {
 public:
  explicit ExpressionReader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  std::string_view number_token() {
    const size_t start = pos_;
    while (!done()) {
      char c = text_[pos_];
      const bool exponent_sign =
          (c == '+' || c == '-') && pos_ > start && (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E');
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/' || c == 'e' ||
          c == 'E' || exponent_sign) {
        ++pos_;
      } else {
        break;
      }
    }
    return text_.substr(start, pos_ - start);
  }

  unsigned generator_index() {
    if (peek() != 't') fail("expected generator 't<i>'");
    advance();
    const size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || pos_ - start > 4) fail("malformed generator index");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

template <class S>
Grassmann<S> parse_grassmann(std::string_view text, unsigned num_generators) {
  ExpressionReader in(text);
  Grassmann<S> result(num_generators);
  in.skip_space();
  if (in.done()) in.fail("empty expression");

  bool first = true;
  while (true) {
    in.skip_space();
    if (in.done()) break;
    S sign = S(1);
    if (in.peek() == '+' || in.peek() == '-') {
      if (in.peek() == '-') sign = S(-1);
      in.advance();
      in.skip_space();
    } else if (!first) {
      in.fail("expected '+' or '-'");
    }
    first = false;

    S coefficient = S(1);
    bool has_monomial = true;
    if (in.peek() != 't') {
      auto token = in.number_token();
      if (token.empty()) in.fail("expected a coefficient or generator");
      coefficient = ScalarTraits<S>::parse(token);
      in.skip_space();
      if (in.peek() == '*') {
        in.advance();
        in.skip_space();
      } else {
        has_monomial = false;
      }
    }

    Monomial monomial = 0;
    int term_sign = 1;
    if (has_monomial) {
      std::vector<unsigned> indices;
      indices.push_back(in.generator_index());
      in.skip_space();
      while (in.peek() == '^') {
        in.advance();
        in.skip_space();
        indices.push_back(in.generator_index());
        in.skip_space();
      }
      for (unsigned i : indices) {
        if (i >= num_generators) {
          in.fail("generator t" + std::to_string(i) + " outside an algebra of " +
                  std::to_string(num_generators) + " generators");
        }
        const Monomial bit = Monomial{1} << i;
        const int s = monomial_product_sign(monomial, bit);
        if (s == 0) {
          term_sign = 0;
          break;
        }
        term_sign *= s;
        monomial |= bit;
      }
    }
    if (term_sign == 0) continue;
    S c = S(sign * coefficient);
    if (term_sign < 0) c = -c;
    typename Grassmann<S>::Terms single{{monomial, c}};
    result += Grassmann<S>::from_terms(num_generators, std::move(single));
  }
  return result;
}

#define SUPERTEICH_INSTANTIATE(S)                                                     \
  template class Grassmann<S>;                                                        \
  template Grassmann<S> gmul(const Grassmann<S>&, const Grassmann<S>&);               \
  template Grassmann<S> ginv(const Grassmann<S>&);                                    \
  template Grassmann<S> gsqrt(const Grassmann<S>&);                                   \
  template Grassmann<S> glog(const Grassmann<S>&);                                    \
  template double max_abs_difference(const Grassmann<S>&, const Grassmann<S>&);      \
  template bool approx_equal(const Grassmann<S>&, const Grassmann<S>&, double);       \
  template std::string to_string(const Grassmann<S>&);                                \
  template Grassmann<S> parse_grassmann<S>(std::string_view, unsigned);

SUPERTEICH_INSTANTIATE(Rational)
SUPERTEICH_INSTANTIATE(double)

#undef SUPERTEICH_INSTANTIATE

}  // namespace superteich
