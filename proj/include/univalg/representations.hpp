#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "univalg/lie.hpp"
#include "univalg/universal_algebra.hpp"

namespace univalg {

/// Finite-dimensional A-module: x_si acts by mat(s, i) (column convention).
class MatrixARep {
 public:
  MatrixARep(UniversalAlgebraPtr owner, std::size_t dim);  // all generators act by zero
  MatrixARep(UniversalAlgebraPtr owner, std::vector<Matrix> mats, std::string name = {});

  const UniversalAlgebraPtr& owner() const { return owner_; }
  std::size_t dim() const { return dim_; }
  /// 0-based (s, i).
  const Matrix& mat(std::size_t s, std::size_t i) const { return mats_[owner_->var(s, i)]; }
  /// Indexed by variable number.
  const std::vector<Matrix>& mats() const { return mats_; }
  const std::string& name() const { return name_; }
  /// Action matrix of a polynomial in k[X].
  Matrix action_of(const Polynomial& p) const;

 private:
  UniversalAlgebraPtr owner_;
  std::size_t dim_;
  std::vector<Matrix> mats_;
  std::string name_;
};

/// p evaluated at commuting matrices (mats[v] for variable v).
Matrix evaluate_at_matrices(const Polynomial& p, const std::vector<Matrix>& mats, std::size_t dim);

/// Violations only: "commute" at (s,i,t,j) and "relation" at (a,i,j).
Report validate_arep(const MatrixARep& R);

bool is_arep_morphism(const LinearMap& f, const MatrixARep& V, const MatrixARep& W);
std::vector<LinearMap> arep_morphisms(const MatrixARep& V, const MatrixARep& W);

/// The ground field as a B-module: x_ij acts by delta_ij.
MatrixARep counit_rep(const UniversalAlgebraPtr& B);
/// One-dimensional module at a point of the variety (value per variable).
MatrixARep point_rep(const UniversalAlgebraPtr& A, const std::vector<Rational>& values);
MatrixARep direct_sum(const MatrixARep& a, const MatrixARep& b);
MatrixARep conjugate(const MatrixARep& R, const Matrix& Q);

/// U (x) V as a Lie g-module: f_i -> (u_l (x) v_t) = sum_j (e_j -> u_l) (x) (x_ji . v_t).
/// Basis u_l (x) v_t sits at position l*dim V + t (0-based). The same formula
/// serves Y (x) V for a Lie h-module Y.
struct TensorGModule {
  LieModule result;
};

TensorGModule tensor_lie_module(const LieModule& U, const MatrixARep& V);
/// id_U (x) g; throws ValidationError unless g is an A-module map.
LinearMap tensor_on_morphism(const LieModule& U, const MatrixARep& V, const MatrixARep& W, const LinearMap& g);

/// For h = k: f_t acts on the underlying space of R by the matrix of x_1t.
LieModule induced_g_module(const MatrixARep& R);
/// Scalar case on k^1. Throws ValidationError unless sum_u beta(i,j,u) c_u = 0.
LieModule induced_g_module_from_scalar_rep(const LieAlgebraPtr& g, const std::vector<Rational>& scalars);

}  // namespace univalg
