#include <doctest.h>

#include <random>

#include "tpa/error.hpp"
#include "tpa/scalar.hpp"

using tpa::Polynomial;
using tpa::Rational;
using RF = tpa::RationalFunction;

namespace {

RF t() { return RF::t(); }

Polynomial poly(std::initializer_list<long long> c) {
  std::vector<Rational> v;
  for (auto x : c) {
    v.emplace_back(x);
  }
  return Polynomial(v);
}

} // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-3, 2).denominator() == 2);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(0).inv(), tpa::DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), tpa::DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/0"), tpa::ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), tpa::ParseError);
  Rational root;
  CHECK(Rational(9, 4).exact_sqrt(root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(Rational(2).exact_sqrt(root));
}

TEST_CASE("polynomial division and gcd") {
  const Polynomial a = poly({-1, 0, 1}); // t^2 - 1
  const Polynomial b = poly({1, 1});     // t + 1
  const auto [quot, rem] = a.divmod(b);
  CHECK(quot == poly({-1, 1}));
  CHECK(rem.is_zero());
  CHECK(tpa::gcd(a, poly({2, 2})) == b);
  CHECK(poly({0, 0, 3}).valuation() == 2);
  CHECK_THROWS_AS(a.divmod(Polynomial()), tpa::DivisionByZero);
}

TEST_CASE("rational functions normalize eagerly") {
  const RF f = t() / (t() + RF(1));
  const RF g = (t() + RF(1)) / t();
  CHECK(f * g == RF(1));
  CHECK((f * g).is_constant());
  const RF h(poly({0, 2}), poly({0, 4})); // 2t / 4t
  CHECK(h == RF(Rational(1, 2)));
  CHECK(h.denominator() == Polynomial(Rational(1)));
  // denominator monic
  const RF k(poly({1}), poly({2, 6}));
  CHECK(k.denominator().leading() == Rational(1));
  CHECK_THROWS_AS(RF(0).inv(), tpa::DivisionByZero);
  CHECK_THROWS_AS(RF(poly({1}), Polynomial()), tpa::DivisionByZero);
}

TEST_CASE("limit at zero") {
  CHECK(((t() * t() + RF(3) * t()) / t()).limit_at_zero() == Rational(3));
  CHECK_THROWS_AS(RF::t_pow(-1).limit_at_zero(), tpa::Diverges);
  CHECK((RF(2) * RF::t_pow(3) / RF::t_pow(2)).limit_at_zero() == Rational(0));
  CHECK(((RF(2) + t()) / (RF(4) - t())).limit_at_zero() == Rational(1, 2));
  CHECK(RF(0).limit_at_zero() == Rational(0));
}

TEST_CASE("text encoding") {
  CHECK(tpa::parse_rational_function("t^-3") == RF::t_pow(-3));
  CHECK(tpa::parse_rational_function("(1 + 2*t)/(t^2)") == (RF(1) + RF(2) * t()) / (t() * t()));
  CHECK(tpa::parse_rational_function("-1/2") == RF(Rational(-1, 2)));
  CHECK(tpa::parse_rational_function("(-1)/(t)") == RF(-1) / t());
  CHECK_THROWS_AS(tpa::parse_rational_function("(1 + t"), tpa::ParseError);
  CHECK_THROWS_AS(tpa::parse_rational_function("1/(t - t)"), tpa::DivisionByZero);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int k = 0; k < 50; ++k) {
    const RF f = (RF(c(rng)) + RF(c(rng)) * t() + RF(c(rng)) * t() * t()) /
                 (RF(c(rng) == 0 ? 1 : 2) + RF(c(rng)) * t()) * RF::t_pow(c(rng) % 3);
    CHECK(tpa::parse_rational_function(f.to_string()) == f);
  }
}

TEST_CASE("property: field axioms and evaluation homomorphism on Q(t)") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-6, 6);
  auto rand_rf = [&] {
    RF den = RF(c(rng)) + RF(c(rng)) * t();
    if (den.is_zero()) {
      den = RF(1);
    }
    return (RF(c(rng)) + RF(c(rng)) * t() + RF(c(rng)) * t() * t()) / den;
  };
  for (int k = 0; k < 100; ++k) {
    const RF a = rand_rf(), b = rand_rf(), d = rand_rf();
    CHECK(a + b == b + a);
    CHECK(a * (b + d) == a * b + a * d);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
    }
    const Rational x(c(rng), 7);
    const auto defined = [&x](const RF& f) { return !f.denominator().evaluate(x).is_zero(); };
    if (defined(a) && defined(b) && defined(a * b)) {
      CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    }
    // p/q * q/p has limit 1 whenever p(0), q(0) != 0
    const RF p = RF(c(rng) == 0 ? 3 : 1) + RF(c(rng)) * t();
    const RF qq = RF(2) + RF(c(rng)) * t() * t();
    CHECK(((p / qq) * (qq / p)).limit_at_zero() == Rational(1));
  }
}
