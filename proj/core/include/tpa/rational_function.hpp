#pragma once

#include <iosfwd>
#include <string>

#include "tpa/polynomial.hpp"
#include "tpa/rational.hpp"

namespace tpa {

/// Element of Q(t): num/den with gcd(num, den) = 1 and den monic.
/// Every arithmetic result is reduced eagerly.
class RationalFunction {
public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(long long c) : RationalFunction(Rational(c)) {} // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {} // NOLINT(google-explicit-constructor)
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {} // NOLINT(google-explicit-constructor)
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction t() { return RationalFunction(Polynomial::t()); }
  /// t^k for any integer k.
  static RationalFunction t_pow(int k);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; throws std::logic_error if t occurs.
  Rational constant_value() const;

  RationalFunction inv() const;
  Rational evaluate(const Rational& at) const;

  /// lim_{t->0}; throws Diverges on a pole at 0.
  Rational limit_at_zero() const;

  std::string to_string() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

} // namespace tpa
