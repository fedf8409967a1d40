#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "tpa/algebra.hpp"

namespace tpa {

enum class Identity { commutative, associative, anticommutative, jacobi, transposed_leibniz, leibniz };

inline constexpr std::array<Identity, 6> all_identities{Identity::commutative,        Identity::associative,
                                                        Identity::anticommutative,    Identity::jacobi,
                                                        Identity::transposed_leibniz, Identity::leibniz};

std::string_view to_string(Identity id);
/// Throws ParseError on an unknown name.
Identity parse_identity(std::string_view name);

template <Field S>
struct Violation {
  std::vector<int> indices; // 1-based basis indices of the failing instance
  std::vector<S> residual;
};

template <Field S>
struct IdentityReport {
  Identity identity{};
  bool holds = true;
  std::vector<Violation<S>> violations;
};

namespace detail {

template <Field S>
bool all_zero(const std::vector<S>& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) {
      return false;
    }
  }
  return true;
}

template <Field S>
void add_to(std::vector<S>& acc, const std::vector<S>& v, const S& s) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (!v[i].is_zero()) {
      acc[i] += s * v[i];
    }
  }
}

template <Field S>
void record(IdentityReport<S>& rep, std::vector<int> idx, std::vector<S> residual) {
  if (!all_zero(residual)) {
    rep.violations.push_back({std::move(idx), std::move(residual)});
  }
}

} // namespace detail

/// Checks one identity on every basis instance; multilinearity makes this complete.
/// commutative/associative read pair.mul, anticommutative/jacobi read pair.bracket,
/// the two Leibniz rules read both.
template <Field S>
IdentityReport<S> check_identity(const AlgebraPair<S>& pair, Identity which) {
  using detail::add_to;
  using detail::record;
  const std::size_t n = pair.dim();
  const auto& m = pair.mul;
  const auto& b = pair.bracket;
  auto e = [n](std::size_t i) { return basis_vector<S>(n, i); };
  const S one(1);
  const S minus_one(-1);
  IdentityReport<S> rep;
  rep.identity = which;
  auto id3 = [](std::size_t i, std::size_t j, std::size_t k) {
    return std::vector<int>{static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(k + 1)};
  };

  switch (which) {
  case Identity::commutative:
  case Identity::anticommutative: {
    const auto& sc = which == Identity::commutative ? m : b;
    const S sign = which == Identity::commutative ? minus_one : one;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (which == Identity::commutative && i == j) {
          continue;
        }
        std::vector<S> r = sc.product(i, j);
        add_to(r, sc.product(j, i), sign);
        record(rep, {static_cast<int>(i + 1), static_cast<int>(j + 1)}, std::move(r));
      }
    }
    break;
  }
  case Identity::associative:
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto ij = m.product(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<S> r = m.evaluate(ij, e(k));
          add_to(r, m.evaluate(e(i), m.product(j, k)), minus_one);
          record(rep, id3(i, j, k), std::move(r));
        }
      }
    }
    break;
  case Identity::jacobi:
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          std::vector<S> r = b.evaluate(b.product(i, j), e(k));
          add_to(r, b.evaluate(b.product(j, k), e(i)), one);
          add_to(r, b.evaluate(b.product(k, i), e(j)), one);
          record(rep, id3(i, j, k), std::move(r));
        }
      }
    }
    break;
  case Identity::transposed_leibniz:
    // 2 e_k.[e_i,e_j] - [e_k.e_i, e_j] - [e_i, e_k.e_j]
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<S> r(n, S(0));
          add_to(r, m.evaluate(e(k), b.product(i, j)), S(2));
          add_to(r, b.evaluate(m.product(k, i), e(j)), minus_one);
          add_to(r, b.evaluate(e(i), m.product(k, j)), minus_one);
          record(rep, id3(i, j, k), std::move(r));
        }
      }
    }
    break;
  case Identity::leibniz:
    // [e_i.e_j, e_k] - e_i.[e_j,e_k] - [e_i,e_k].e_j
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<S> r = b.evaluate(m.product(i, j), e(k));
          add_to(r, m.evaluate(e(i), b.product(j, k)), minus_one);
          add_to(r, m.evaluate(b.product(i, k), e(j)), minus_one);
          record(rep, id3(i, j, k), std::move(r));
        }
      }
    }
    break;
  }
  rep.holds = rep.violations.empty();
  return rep;
}

template <Field S>
bool holds(const AlgebraPair<S>& pair, Identity which) {
  return check_identity(pair, which).holds;
}

template <Field S>
bool is_transposed_poisson(const AlgebraPair<S>& pair) {
  for (Identity id : {Identity::commutative, Identity::associative, Identity::anticommutative, Identity::jacobi,
                      Identity::transposed_leibniz}) {
    if (!holds(pair, id)) {
      return false;
    }
  }
  return true;
}

/// Anticommutative and Jacobi.
template <Field S>
bool is_lie(const StructureConstants<S>& bracket) {
  const AlgebraPair<S> p(StructureConstants<S>(bracket.dim()), bracket);
  return holds(p, Identity::anticommutative) && holds(p, Identity::jacobi);
}

/// Commutative and associative.
template <Field S>
bool is_commutative_associative(const StructureConstants<S>& mul) {
  const AlgebraPair<S> p(mul, StructureConstants<S>(mul.dim()));
  return holds(p, Identity::commutative) && holds(p, Identity::associative);
}

} // namespace tpa
