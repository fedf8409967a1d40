#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tpa/rational.hpp"

namespace tpa {

/// Dense univariate polynomial over Q in the variable t.
/// coeffs()[i] is the coefficient of t^i; trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(const Rational& constant); // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(const Rational& coeff, int degree);
  static Polynomial t() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Exponent of the lowest nonzero term; -1 for the zero polynomial.
  int valuation() const;
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  Rational evaluate(const Rational& at) const;
  Polynomial monic() const;

  /// Quotient and remainder of Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Terms in ascending degree, e.g. "1 - 3*t + t^2".
  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

} // namespace tpa
