#pragma once

#include <cstddef>

#include "univalg/lie.hpp"

namespace univalg::catalog {

/// sl2 with e1 = E, e2 = F, e3 = H: [e1,e2] = e3, [e3,e1] = 2 e1, [e3,e2] = -2 e2.
LieAlgebraPtr sl2();
LieAlgebraPtr abelian(std::size_t dim);
/// The 1-dimensional algebra k.
inline LieAlgebraPtr line() { return abelian(1); }
/// [e1,e2] = e3.
LieAlgebraPtr heisenberg();
/// Non-abelian 2-dimensional algebra, [e1,e2] = e2.
LieAlgebraPtr aff2();

/// Algebra with basis b'_i = sum_k P(k,i) b_k; P must be invertible.
LieAlgebraPtr change_of_basis(const LieAlgebra& L, const Matrix& P);

LieModule adjoint(const LieAlgebraPtr& L);
LieModule trivial(const LieAlgebraPtr& L, std::size_t dim);
/// Irreducible sl2-module of binary forms of degree d, basis X^(d-k) Y^k,
/// E = X d/dY, F = Y d/dX, H = X d/dX - Y d/dY.
LieModule sl2_irrep(std::size_t d);

/// M viewed over change_of_basis(L, P) (same space, transported action).
LieModule transport(const LieModule& M, const LieAlgebraPtr& target, const Matrix& P);
/// M conjugated by the invertible Q: action Q A_i Q^-1.
LieModule conjugate(const LieModule& M, const Matrix& Q);

}  // namespace univalg::catalog
