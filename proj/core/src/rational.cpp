#include "delpezzo/rational.hpp"

#include <algorithm>
#include <cctype>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!is_decimal_integer(text)) {
    throw InputError("malformed integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational result(1);
  Rational base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Integer Rational::height() const {
  Integer n = ::abs(value_.get_num());
  return n > value_.get_den() ? n : value_.get_den();
}

std::size_t Rational::bit_size() const {
  return std::max(bit_length(value_.get_num()), bit_length(value_.get_den()));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InputError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Integer> exact_cbrt(const Integer& n) {
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
  return r;
}

std::optional<Rational> is_square(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  auto num = exact_sqrt(x.numerator());
  if (!num) return std::nullopt;
  auto den = exact_sqrt(x.denominator());
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

std::size_t bit_length(const Integer& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace delpezzo

std::size_t std::hash<delpezzo::Rational>::operator()(const delpezzo::Rational& r) const noexcept {
  const std::size_t h1 = mpz_fdiv_ui(r.numerator().get_mpz_t(), 1000000007UL);
  const std::size_t h2 = mpz_fdiv_ui(r.denominator().get_mpz_t(), 998244353UL);
  return h1 * 1315423911U ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6U) + (h1 >> 2U));
}
