#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace univalg {

/// Commutative monomial stored as sorted (variable, exponent) pairs with
/// strictly positive exponents.
class Monomial {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  /// Builds from arbitrary (var, exp) pairs; duplicates are summed and zero
  /// exponents dropped.
  Monomial(std::initializer_list<Entry> entries);
  explicit Monomial(std::vector<Entry> entries);
  static Monomial variable(std::uint32_t var, std::uint32_t exp = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(std::uint32_t var) const;
  /// One past the largest variable index used (0 for the unit monomial).
  std::uint32_t span() const { return entries_.empty() ? 0 : entries_.back().first + 1; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  /// Structural order (not a term order); used for associative containers.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Renders with the given variable names, e.g. "X[1,2]^2*X[3,1]"; "1" for the unit.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace univalg
