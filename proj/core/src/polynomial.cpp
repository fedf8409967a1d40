#include "tpa/polynomial.hpp"

#include <algorithm>

#include "tpa/error.hpp"

namespace tpa {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) {
    c_.push_back(constant);
  }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& coeff, int degree) {
  if (coeff.is_zero()) {
    return {};
  }
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) {
    c_.pop_back();
  }
}

int Polynomial::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) {
    return Rational(0);
  }
  return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) {
    return {};
  }
  const Rational lc_inv = leading().inv();
  Polynomial out = *this;
  for (auto& x : out.c_) {
    x *= lc_inv;
  }
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) {
    throw DivisionByZero();
  }
  if (degree() < divisor.degree()) {
    return {Polynomial(), *this};
  }
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot(c_.size() - divisor.c_.size() + 1);
  const Rational lc_inv = divisor.leading().inv();
  const std::size_t dd = divisor.c_.size() - 1;
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i].is_zero()) {
      continue;
    }
    const Rational q = rem[i] * lc_inv;
    quot[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] -= q * divisor.c_[j];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) {
    c_.resize(o.c_.size());
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] += o.c_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) {
    c_.resize(o.c_.size());
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] -= o.c_[i];
  }
  trim();
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& x : out.c_) {
    x = -x;
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      c[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) {
      continue;
    }
    Rational mag = c_[i];
    if (first) {
      if (mag.sign() < 0) {
        out += "-";
        mag = -mag;
      }
    } else {
      out += mag.sign() < 0 ? " - " : " + ";
      mag = mag.abs();
    }
    first = false;
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) {
      out += mag.to_string() + "*";
    }
    out += "t";
    if (i > 1) {
      out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

} // namespace tpa
