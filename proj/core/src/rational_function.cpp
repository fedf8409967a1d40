#include "tpa/rational_function.hpp"

#include <ostream>
#include <stdexcept>

#include "tpa/error.hpp"

namespace tpa {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) {
    throw DivisionByZero();
  }
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const Rational lc = den_.leading();
  if (!lc.is_one()) {
    const Rational inv = lc.inv();
    num_ = num_ * Polynomial(inv);
    den_ = den_ * Polynomial(inv);
  }
}

RationalFunction RationalFunction::t_pow(int k) {
  if (k >= 0) {
    return RationalFunction(Polynomial::monomial(Rational(1), k));
  }
  return RationalFunction(Polynomial(Rational(1)), Polynomial::monomial(Rational(1), -k));
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) {
    throw std::logic_error("rational function is not constant: " + to_string());
  }
  return num_.coeff(0);
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) {
    throw DivisionByZero();
  }
  return RationalFunction(den_, num_);
}

Rational RationalFunction::evaluate(const Rational& at) const {
  return num_.evaluate(at) / den_.evaluate(at);
}

Rational RationalFunction::limit_at_zero() const {
  if (num_.is_zero()) {
    return Rational(0);
  }
  // After reduction at most one of the two valuations is positive.
  if (den_.valuation() > 0) {
    throw Diverges("pole at t = 0 in " + to_string());
  }
  if (num_.valuation() > 0) {
    return Rational(0);
  }
  return num_.coeff(0) / den_.coeff(0);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) {
    throw DivisionByZero();
  }
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::to_string() const {
  if (is_constant()) {
    return num_.coeff(0).to_string();
  }
  const bool den_is_one = den_.is_constant();
  const auto& nc = num_.coeffs();
  const bool num_is_unit_monomial = num_.valuation() == num_.degree() && num_.leading().is_one();
  const bool den_is_unit_monomial = den_.valuation() == den_.degree();
  if (den_is_one && num_is_unit_monomial) {
    return "t^" + std::to_string(num_.degree());
  }
  if (num_.is_constant() && nc[0].is_one() && den_is_unit_monomial) {
    return "t^-" + std::to_string(den_.degree());
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

} // namespace tpa
