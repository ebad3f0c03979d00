#include "univalg/catalog.hpp"

#include "univalg/errors.hpp"

namespace univalg::catalog {

namespace {

// Stores c(i,j,s) = v and c(j,i,s) = -v.
void set_bracket(StructureTable& t, std::size_t i, std::size_t j, std::size_t s, const Rational& v) {
  t.at(i, j, s) = v;
  t.at(j, i, s) = -v;
}

Matrix invert_or_throw(const Matrix& P) {
  auto inv = inverse(P);
  if (!inv) throw ValidationError("change of basis matrix is singular");
  return *inv;
}

}  // namespace

LieAlgebraPtr sl2() {
  StructureTable t(3, 3, 3);
  set_bracket(t, 0, 1, 2, 1);
  set_bracket(t, 2, 0, 0, 2);
  set_bracket(t, 2, 1, 1, -2);
  return std::make_shared<LieAlgebra>("sl2", std::move(t));
}

LieAlgebraPtr abelian(std::size_t dim) {
  return std::make_shared<LieAlgebra>(dim == 1 ? "k" : "abelian" + std::to_string(dim), dim);
}

LieAlgebraPtr heisenberg() {
  StructureTable t(3, 3, 3);
  set_bracket(t, 0, 1, 2, 1);
  return std::make_shared<LieAlgebra>("heisenberg", std::move(t));
}

LieAlgebraPtr aff2() {
  StructureTable t(2, 2, 2);
  set_bracket(t, 0, 1, 1, 1);
  return std::make_shared<LieAlgebra>("aff2", std::move(t));
}

LieAlgebraPtr change_of_basis(const LieAlgebra& L, const Matrix& P) {
  const std::size_t n = L.dim();
  if (P.rows() != n || P.cols() != n) throw DimensionError("change_of_basis: P must be dim x dim");
  const Matrix Pinv = invert_or_throw(P);
  StructureTable t(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector x(n), y(n);
      for (std::size_t k = 0; k < n; ++k) {
        x[k] = P(k, i);
        y[k] = P(k, j);
      }
      const Vector old = Pinv * bracket(L, x, y);
      for (std::size_t s = 0; s < n; ++s) t.at(i, j, s) = old[s];
    }
  return std::make_shared<LieAlgebra>(L.name() + "'", std::move(t));
}

LieModule adjoint(const LieAlgebraPtr& L) {
  const std::size_t n = L->dim();
  std::vector<Matrix> act(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < n; ++s) act[i](s, j) = L->constant(i, j, s);
  return LieModule(L, std::move(act), "ad(" + L->name() + ")");
}

LieModule trivial(const LieAlgebraPtr& L, std::size_t dim) {
  return LieModule(L, std::vector<Matrix>(L->dim(), Matrix(dim, dim)), "trivial" + std::to_string(dim));
}

LieModule sl2_irrep(std::size_t d) {
  const std::size_t n = d + 1;
  Matrix E(n, n), F(n, n), H(n, n);
  for (std::size_t k = 0; k <= d; ++k) {
    // basis vector k is X^(d-k) Y^k
    if (k > 0) E(k - 1, k) = Rational(static_cast<long>(k));
    if (k < d) F(k + 1, k) = Rational(static_cast<long>(d - k));
    H(k, k) = Rational(static_cast<long>(d) - 2 * static_cast<long>(k));
  }
  return LieModule(sl2(), {E, F, H}, "V" + std::to_string(d));
}

LieModule transport(const LieModule& M, const LieAlgebraPtr& target, const Matrix& P) {
  const std::size_t n = M.algebra()->dim();
  if (target->dim() != n || P.rows() != n || P.cols() != n) throw DimensionError("transport: size mismatch");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < n; ++i) act.push_back(M.action_of(P.column(i)));
  return LieModule(target, std::move(act), M.name());
}

LieModule conjugate(const LieModule& M, const Matrix& Q) {
  const Matrix Qinv = invert_or_throw(Q);
  std::vector<Matrix> act;
  for (const auto& A : M.actions()) act.push_back(Q * A * Qinv);
  return LieModule(M.algebra(), std::move(act), M.name());
}

}  // namespace univalg::catalog
