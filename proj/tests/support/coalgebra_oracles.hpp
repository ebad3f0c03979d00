#pragma once

#include "support/oracles.hpp"
#include "univalg/coalgebra.hpp"

namespace univalg::testing {

// X1 (x) X2 as a B-module through Delta(x_ab) = sum_c x_ac (x) x_cb.
inline MatrixARep tensor_arep(const UniversalAlgebraPtr& B, const MatrixARep& X1, const MatrixARep& X2) {
  const std::size_t n = B->n();
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix m(X1.dim() * X2.dim(), X1.dim() * X2.dim());
      for (std::size_t c = 0; c < n; ++c) m += kron(X1.mat(a, c), X2.mat(c, b));
      mats.push_back(m);
    }
  return MatrixARep(B, mats, "tensor");
}

// Generator images of (theta1 (x) theta2) Delta, from the closed formula.
inline Matrix delta_images(const UniversalAModule& UM, const Matrix& t1, const Matrix& t2) {
  const std::size_t m = UM.U().dim();
  Matrix out(t1.rows() * t2.rows(), UM.rank());
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t s = 0; s < m; ++s) {
        const Matrix block = kron(Matrix::from_columns({t1.column(UM.position(l, s))}, t1.rows()),
                                  Matrix::from_columns({t2.column(UM.position(s, t))}, t2.rows()));
        for (std::size_t r = 0; r < out.rows(); ++r) out(r, UM.position(l, t)) += block(r, 0);
      }
  return out;
}

// Matrix coalgebra z_lt (index l*m + t) on which x_11 acts by Z -> S^-1 Z S, S = N^T.
inline FiniteCoalgebra matrix_coalgebra(const UniversalAlgebraPtr& B, const Matrix& N) {
  const std::size_t m = N.rows(), d = m * m;
  const Matrix Ninv = *inverse(N);
  Matrix L(d, d), delta(d * d, d);
  Vector eps(d);
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) L(p * m + q, t * m + r) = Ninv(t, p) * N(q, r);
      for (std::size_t s = 0; s < m; ++s) delta((t * m + s) * d + (s * m + r), t * m + r) = 1;
      if (t == r) eps[t * m + r] = 1;
    }
  return {MatrixARep(B, {L}, "Mat"), delta, eps};
}

}  // namespace univalg::testing
