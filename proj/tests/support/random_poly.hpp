#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "univalg/matrix.hpp"
#include "univalg/polynomial.hpp"

namespace univalg::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int range = 3, int max_den = 2) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero(Rng& rng, int range = 3) {
  Rational r;
  do r = random_rational(rng, range); while (r.is_zero());
  return r;
}

inline Monomial random_monomial(Rng& rng, std::uint32_t nvars, std::uint32_t max_degree) {
  std::uniform_int_distribution<std::uint32_t> var(0, nvars - 1);
  std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
  std::vector<Monomial::Entry> entries;
  const auto d = deg(rng);
  for (std::uint32_t k = 0; k < d; ++k) entries.emplace_back(var(rng), 1);
  return Monomial(std::move(entries));
}

inline Polynomial random_polynomial(Rng& rng, const OrderPtr& order, std::uint32_t nterms,
                                    std::uint32_t max_degree) {
  std::vector<Term> terms;
  for (std::uint32_t k = 0; k < nterms; ++k)
    terms.push_back({random_monomial(rng, static_cast<std::uint32_t>(order->nvars()), max_degree),
                     random_rational(rng)});
  return Polynomial(order, std::move(terms));
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int range = 2) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, range, 1);
  return m;
}

inline Matrix random_invertible(Rng& rng, std::size_t n, int range = 2) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, range);
    if (inverse(m)) return m;
  }
}

}  // namespace univalg::testing
