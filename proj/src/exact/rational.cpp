// SPDX-License-Identifier: Apache-2.0
#include "poincare/exact/rational.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>

namespace poincare {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("invalid rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("invalid rational: '" + std::string(whole) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text), mpz_class(1));
  const mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
  std::string_view rest = trim(s.substr(slash + 1));
  mpz_class den;
  const auto caret = rest.find('^');
  if (caret != std::string_view::npos) {
    if (trim(rest.substr(0, caret)) != "2") throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
    const mpz_class e = parse_integer(trim(rest.substr(caret + 1)), text);
    if (e < 0 || !e.fits_ulong_p()) throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
    mpz_ui_pow_ui(den.get_mpz_t(), 2, e.get_ui());
  } else {
    den = parse_integer(rest, text);
  }
  if (den <= 0) throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const {
  const std::hash<std::string> h;
  return h(value_.get_num().get_str(16)) * 31u + h(value_.get_den().get_str(16));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace poincare
