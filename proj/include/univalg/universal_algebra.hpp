#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "univalg/groebner.hpp"
#include "univalg/lie.hpp"
#include "univalg/report.hpp"

namespace univalg {

/// P_(a,i,j) together with its 1-based index triple.
struct LabeledPolynomial {
  std::size_t a, i, j;
  Polynomial poly;
};

/// Variable X[s,i] (1-based) has index (s-1)*d + (i-1).
std::vector<std::string> universal_variable_names(std::size_t n, std::size_t d);

/// P_(a,i,j) = sum_u beta(i,j,u) X[a,u] - sum_{s,t} tau(s,t,a) X[s,i] X[t,j],
/// in (a,i,j) order, zero polynomials included.
std::vector<LabeledPolynomial> universal_polynomials(const LieAlgebra& h, const LieAlgebra& g,
                                                     const OrderPtr& order);

/// A(h,g) = k[X_si] / J.
class UniversalAlgebra {
 public:
  UniversalAlgebra(LieAlgebraPtr h, LieAlgebraPtr g, OrderPtr order, std::vector<LabeledPolynomial> jgens,
                   GroebnerBasis gb);

  const LieAlgebraPtr& h() const { return h_; }
  const LieAlgebraPtr& g() const { return g_; }
  std::size_t n() const { return h_->dim(); }
  std::size_t d() const { return g_->dim(); }
  std::size_t nvars() const { return n() * d(); }
  /// 0-based (s, i).
  std::uint32_t var(std::size_t s, std::size_t i) const { return static_cast<std::uint32_t>(s * d() + i); }
  Polynomial x(std::size_t s, std::size_t i) const { return Polynomial::variable(order_, var(s, i)); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(order_, c); }
  const OrderPtr& order() const { return order_; }
  const std::vector<LabeledPolynomial>& jgens() const { return jgens_; }
  std::vector<Polynomial> generator_polynomials() const;
  const GroebnerBasis& gb() const { return gb_; }
  const std::vector<std::string>& variable_names() const { return names_; }
  bool is_bialgebra() const { return *h_ == *g_; }

 private:
  LieAlgebraPtr h_, g_;
  OrderPtr order_;
  std::vector<LabeledPolynomial> jgens_;
  GroebnerBasis gb_;
  std::vector<std::string> names_;
};

using UniversalAlgebraPtr = std::shared_ptr<const UniversalAlgebra>;

UniversalAlgebraPtr build_universal_algebra(LieAlgebraPtr h, LieAlgebraPtr g, OrderKind kind = OrderKind::degrevlex,
                                            const GroebnerOptions& options = {});

/// Element of A in normal form.
struct AlgebraElement {
  UniversalAlgebraPtr owner;
  Polynomial value;
  bool is_zero() const { return value.is_zero(); }
  std::string to_string() const { return value.to_string(owner->variable_names()); }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.value == b.value; }
};

AlgebraElement reduce(const UniversalAlgebraPtr& A, const Polynomial& p);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);

/// Checks reduce(sum tau X X) == reduce(sum beta X) for every (a,i,j) and that
/// the basis generates the same ideal as the P's; records every check.
Report verify_universal_relations(const UniversalAlgebra& A);

/// Standard monomials of total degree <= dmax, ascending in the term order.
std::vector<Monomial> monomial_basis_up_to_degree(const UniversalAlgebra& A, std::uint32_t dmax);

/// The sl2 presentation listed in the literature (variables X[s,i]).
std::vector<Polynomial> sl2_golden_polynomials(const OrderPtr& order);

/// Delta(x_ij) = sum_s x_is (x) x_sj and eps(x_ij) = delta_ij on B = A(h,h).
/// Tensors live in k[X', X''] with X'[i,j] = variable (i-1)n+(j-1) and
/// X''[i,j] = n^2 + (i-1)n+(j-1).
class BialgebraStructure {
 public:
  explicit BialgebraStructure(UniversalAlgebraPtr owner);

  const UniversalAlgebraPtr& owner() const { return owner_; }
  const OrderPtr& tensor_order() const { return tensor_order_; }
  std::vector<std::string> tensor_names() const;
  /// Delta applied to a polynomial of k[X] (multiplicative extension).
  Polynomial delta(const Polynomial& p) const;
  /// Epsilon applied to a polynomial of k[X].
  Rational epsilon(const Polynomial& p) const;
  /// Basis of J' + J'' in the tensor ring.
  const GroebnerBasis& tensor_ideal() const { return tensor_gb_; }
  /// Every check: counit kills J, Delta(J) in J' + J'', coassociativity and
  /// both counit laws on generators.
  const Report& report() const { return report_; }

 private:
  UniversalAlgebraPtr owner_;
  OrderPtr tensor_order_;
  GroebnerBasis tensor_gb_;
  std::vector<Polynomial> delta_images_;
  Report report_;
};

/// Throws MismatchError unless h = g; throws StructuralError if a law fails.
BialgebraStructure bialgebra_structure(const UniversalAlgebraPtr& A);

}  // namespace univalg
