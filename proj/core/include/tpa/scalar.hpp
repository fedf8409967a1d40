#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "tpa/rational.hpp"
#include "tpa/rational_function.hpp"

namespace tpa {

/// The field-operations contract shared by Q and Q(t).
template <class S>
concept Field = std::regular<S> && std::constructible_from<S, long long> &&
                std::constructible_from<S, const Rational&> && requires(const S a, const S b) {
                  { a + b } -> std::same_as<S>;
                  { a - b } -> std::same_as<S>;
                  { a * b } -> std::same_as<S>;
                  { a / b } -> std::same_as<S>;
                  { -a } -> std::same_as<S>;
                  { a.inv() } -> std::same_as<S>;
                  { a.is_zero() } -> std::convertible_to<bool>;
                  { a.to_string() } -> std::convertible_to<std::string>;
                };

static_assert(Field<Rational>);
static_assert(Field<RationalFunction>);

/// Parses the text encoding of a rational function: sums, products, quotients
/// and integer powers of rationals and t, e.g. "(1 + 2*t)/(t^2)" or "t^-3".
RationalFunction parse_rational_function(std::string_view text);

template <Field S>
S parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
  return Rational::parse(text);
}

template <>
inline RationalFunction parse_scalar<RationalFunction>(std::string_view text) {
  return parse_rational_function(text);
}

} // namespace tpa
