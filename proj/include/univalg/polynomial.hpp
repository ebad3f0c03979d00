#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "univalg/monomial.hpp"
#include "univalg/rational.hpp"

namespace univalg {

enum class OrderKind { degrevlex, lex };

std::string to_string(OrderKind kind);
/// Accepts "degrevlex" or "lex"; throws ParseError otherwise.
OrderKind parse_order_kind(const std::string& text);

/// Admissible term order on monomials in a fixed number of variables.
/// `ranking[k]` is the variable of rank k; rank 0 is the largest variable.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::size_t nvars);
  MonomialOrder(OrderKind kind, std::vector<std::uint32_t> ranking);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return rank_of_.size(); }
  const std::vector<std::uint32_t>& ranking() const { return ranking_; }
  std::uint32_t rank_of(std::uint32_t var) const { return rank_of_.at(var); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.ranking_ == b.ranking_;
  }

 private:
  OrderKind kind_;
  std::vector<std::uint32_t> ranking_;
  std::vector<std::uint32_t> rank_of_;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

OrderPtr make_order(OrderKind kind, std::size_t nvars);
bool same_order(const OrderPtr& a, const OrderPtr& b);

struct Term {
  Monomial monomial;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Multivariate polynomial over Q. Terms are kept strictly decreasing under
/// the attached order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(OrderPtr order) : order_(std::move(order)) {}
  /// Arbitrary terms; like monomials are combined and zeros dropped.
  Polynomial(OrderPtr order, std::vector<Term> terms);

  static Polynomial constant(OrderPtr order, const Rational& c);
  static Polynomial variable(OrderPtr order, std::uint32_t var);
  static Polynomial monomial(OrderPtr order, Monomial m, const Rational& c = Rational(1));

  const OrderPtr& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  std::uint32_t total_degree() const;
  Rational coefficient(const Monomial& m) const;
  /// Sum of the terms of total degree <= d.
  Polynomial truncate_degree(std::uint32_t d) const;

  Polynomial monic() const;
  Polynomial with_order(OrderPtr order) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// c * m * this.
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  /// this += c * m * q, in a single merge pass.
  void add_scaled(const Polynomial& q, const Monomial& m, const Rational& c);

  /// Low-level helpers for reduction loops.
  Term pop_leading();
  /// Appends a term strictly smaller than every current term.
  void push_smallest(Term t);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical rendering: descending terms, rationals as "p/q".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void require_compatible(const Polynomial& o) const;

  OrderPtr order_;
  std::vector<Term> terms_;
};

/// Ring homomorphism sending variable v to images[v]; result uses `target`.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images,
                      const OrderPtr& target);

/// Default names x1, x2, ... for `nvars` variables.
std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace univalg
