#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "univalg/matrix.hpp"
#include "univalg/report.hpp"

namespace univalg {

/// Dense three-index table t[i][j][s], all indices 0-based internally.
class StructureTable {
 public:
  StructureTable() = default;
  StructureTable(std::size_t d1, std::size_t d2, std::size_t d3)
      : d1_(d1), d2_(d2), d3_(d3), data_(d1 * d2 * d3) {}

  std::size_t extent(int axis) const { return axis == 0 ? d1_ : (axis == 1 ? d2_ : d3_); }
  Rational& at(std::size_t i, std::size_t j, std::size_t s) { return data_[(i * d2_ + j) * d3_ + s]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t s) const {
    return data_[(i * d2_ + j) * d3_ + s];
  }
  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t d1_ = 0, d2_ = 0, d3_ = 0;
  std::vector<Rational> data_;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [b_i, b_j] = sum_s c(i, j, s) b_s. Not validated on construction: hand
/// entered tables are checked with validate_lie_algebra.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::size_t dim);  // abelian
  LieAlgebra(std::string name, StructureTable constants);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t s) const { return c_.at(i, j, s); }
  const StructureTable& table() const { return c_; }
  /// Coordinates of [b_i, b_j].
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  std::string name_;
  std::size_t dim_;
  StructureTable c_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

Report validate_lie_algebra(const LieAlgebra& L);
Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y);
/// Span of all brackets (the derived subalgebra), as a row-reduced basis.
std::vector<Vector> derived_subalgebra(const LieAlgebra& L);

/// Linear map between coordinate spaces; column j is the image of the j-th
/// source basis vector.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m) : m_(std::move(m)) {}
  static LinearMap zero(std::size_t source, std::size_t target) { return LinearMap(Matrix(target, source)); }
  static LinearMap identity(std::size_t dim) { return LinearMap(Matrix::identity(dim)); }

  std::size_t source_dim() const { return m_.cols(); }
  std::size_t target_dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Vector operator()(const Vector& v) const { return m_ * v; }
  /// this after g.
  LinearMap after(const LinearMap& g) const { return LinearMap(m_ * g.m_); }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Matrix m_;
};

/// Left Lie module: b_i acts by the matrix action(i) (column convention, so
/// b_i -> u_j = sum_s action(i)(s, j) u_s).
class LieModule {
 public:
  LieModule(LieAlgebraPtr algebra, std::size_t dim);  // trivial action
  LieModule(LieAlgebraPtr algebra, std::vector<Matrix> action, std::string name = {});

  const LieAlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::size_t i) const { return action_.at(i); }
  const std::vector<Matrix>& actions() const { return action_; }
  /// Coefficient a(i, j, s) of u_s in b_i -> u_j.
  const Rational& coefficient(std::size_t i, std::size_t j, std::size_t s) const { return action_[i](s, j); }
  const std::string& name() const { return name_; }
  /// Action matrix of the algebra element x (coordinates).
  Matrix action_of(const Vector& x) const;

 private:
  LieAlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<Matrix> action_;
  std::string name_;
};

Report validate_lie_module(const LieModule& M);
Vector act(const LieModule& M, const Vector& x, const Vector& v);

bool is_module_morphism(const LinearMap& f, const LieModule& M, const LieModule& N);
/// Every basis element of Hom(M, N) as a Lie module map.
std::vector<LinearMap> module_morphisms(const LieModule& M, const LieModule& N);
/// Basis of {T : T src[i] = dst[i] T for all i}.
std::vector<Matrix> intertwiners(const std::vector<Matrix>& src, const std::vector<Matrix>& dst,
                                 std::size_t src_dim, std::size_t dst_dim);

struct DirectSum {
  LieModule sum;
  LinearMap inject_first, inject_second;
  LinearMap project_first, project_second;
};

DirectSum direct_sum(const LieModule& a, const LieModule& b);

}  // namespace univalg
