#include "tpa/rational.hpp"

#include <cctype>
#include <ostream>

#include "tpa/error.hpp"

namespace tpa {

Rational::Rational(long long num, long long den) : Rational(mpz_class(static_cast<long>(num)),
                                                            mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw DivisionByZero();
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& value) : v_(value) { v_.canonicalize(); }

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) {
    return false;
  }
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      return false;
    }
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') {
    text.erase(0, 1);
  }
  return mpz_class(text, 10);
}

} // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_text(text)) {
      throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    return Rational(to_mpz(text), mpz_class(1));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  const mpz_class d = to_mpz(den);
  if (d == 0) {
    throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(to_mpz(num), d);
}

Rational Rational::inv() const {
  if (is_zero()) {
    throw DivisionByZero();
  }
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    return inv().pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

bool Rational::exact_sqrt(Rational& root) const {
  if (sign() < 0) {
    return false;
  }
  if (!mpz_perfect_square_p(v_.get_num_mpz_t()) || !mpz_perfect_square_p(v_.get_den_mpz_t())) {
    return false;
  }
  mpz_class num;
  mpz_class den;
  mpz_sqrt(num.get_mpz_t(), v_.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), v_.get_den_mpz_t());
  root = Rational(num, den);
  return true;
}

std::string Rational::to_string() const { return v_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw DivisionByZero();
  }
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace tpa
