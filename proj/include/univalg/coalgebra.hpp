#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "univalg/universal_modules.hpp"

namespace univalg {

/// Element of M (x) M for a presented A-module M, stored on pairs of free
/// basis elements (position, monomial). Normal forms are taken factorwise:
/// pairs of standard elements form a basis of the tensor square over k.
class TensorSquareElement {
 public:
  using Key = std::tuple<std::size_t, Monomial, std::size_t, Monomial>;

  static TensorSquareElement pure(const ModuleVector& a, const ModuleVector& b);
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Rational& c);
  TensorSquareElement& operator+=(const TensorSquareElement& o);
  TensorSquareElement& operator-=(const TensorSquareElement& o);
  friend TensorSquareElement operator-(TensorSquareElement a, const TensorSquareElement& b) { return a -= b; }
  friend bool operator==(const TensorSquareElement&, const TensorSquareElement&) = default;

 private:
  std::map<Key, Rational> terms_;
};

/// B-module structure on the tensor square of U(U) and on k.
class TensorSquare {
 public:
  TensorSquare(const UniversalAModule& UM, const BialgebraStructure& bialgebra);

  TensorSquareElement normal_form(const TensorSquareElement& t) const;
  /// p * t through Delta(p), p in k[X].
  TensorSquareElement act(const Polynomial& p, const TensorSquareElement& t) const;
  /// q * t for q in the tensor ring k[X', X''].
  TensorSquareElement act_tensor(const Polynomial& q, const TensorSquareElement& t) const;
  std::string render(const TensorSquareElement& t) const;
  const UniversalAModule& owner() const { return *owner_; }
  const BialgebraStructure& bialgebra() const { return *bialgebra_; }

 private:
  const UniversalAModule* owner_;
  const BialgebraStructure* bialgebra_;
  mutable std::map<std::pair<std::size_t, Monomial>, ModuleVector> cache_;
};

/// Every defining relation of B, acting on generator pairs y (x) t and on k,
/// reduces to zero.
Report bmodule_on_tensor_square(const UniversalAModule& UM, const BialgebraStructure& bialgebra);

/// Delta(y_lt) = sum_s y_ls (x) y_st, eps(y_lt) = delta_lt on U(U) = U(U,U).
class CoalgebraOnU {
 public:
  CoalgebraOnU(const UniversalAModule& UM, const BialgebraStructure& bialgebra);

  const UniversalAModule& owner() const { return *owner_; }
  const TensorSquare& square() const { return square_; }
  std::size_t generator(std::size_t l, std::size_t t) const { return owner_->position(l, t); }
  /// Delta on an element of U(U), extended B-linearly from generators.
  TensorSquareElement delta(const ModuleVector& v) const;
  /// eps on an element of U(U).
  Rational epsilon(const ModuleVector& v) const;
  /// Generator images of eps (1 x rank).
  const Matrix& epsilon_matrix() const { return eps_; }
  /// Coassociativity, counit laws, well-definedness and the comparison with
  /// the maps obtained from the universal property.
  const Report& report() const { return report_; }

 private:
  const UniversalAModule* owner_;
  TensorSquare square_;
  Matrix eps_;
  Report report_;
};

/// Requires h = g and Z = U; throws MismatchError otherwise and
/// StructuralError if a certificate fails.
CoalgebraOnU build_coalgebra(const UniversalAModule& UM, const BialgebraStructure& bialgebra);

/// (rho (x) id) rho = (id (x) Delta) rho and (id (x) eps) rho = can_U on each u_r.
Report verify_comodule(const CoalgebraOnU& C);
/// Delta(x_ab . y_lt) = sum_c sum_s (x_ac . y_ls) (x) (x_cb . y_st) and
/// eps(x_ab . y_lt) = delta_ab delta_lt, for all a, b, l, t.
Report verify_bmodule_coalgebra(const CoalgebraOnU& C);

/// Finite-dimensional coalgebra with a B-module structure. Column k of
/// delta is Delta(e_k) with e_i (x) e_j at i*dim + j.
struct FiniteCoalgebra {
  MatrixARep module;
  Matrix delta;
  Vector epsilon;
};

Report validate_finite_coalgebra(const FiniteCoalgebra& X);

struct CoalgebraMapResult {
  /// theta(y_lt) is column (l,t).
  Matrix theta;
  Report report;
};

/// psi: U -> U (x) X must be a Lie h-module map and a right X-coaction
/// (ValidationError otherwise). theta(y_lt) = z_lt with psi(u_r) = sum_s u_s (x) z_sr.
CoalgebraMapResult universal_coalgebra_map(const CoalgebraOnU& C, const FiniteCoalgebra& X, const LinearMap& psi);

}  // namespace univalg
