#include "univalg/representations.hpp"

#include "univalg/errors.hpp"

namespace univalg {

namespace {

std::string render_matrix(const Matrix& m) { return m.to_string(); }

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

bool same_algebra(const UniversalAlgebra& a, const UniversalAlgebra& b) {
  return &a == &b || (*a.h() == *b.h() && *a.g() == *b.g());
}

}  // namespace

MatrixARep::MatrixARep(UniversalAlgebraPtr owner, std::size_t dim)
    : owner_(std::move(owner)), dim_(dim), mats_(owner_->nvars(), Matrix(dim, dim)) {}

MatrixARep::MatrixARep(UniversalAlgebraPtr owner, std::vector<Matrix> mats, std::string name)
    : owner_(std::move(owner)), dim_(0), mats_(std::move(mats)), name_(std::move(name)) {
  if (mats_.size() != owner_->nvars()) throw DimensionError("MatrixARep: need one matrix per variable X[s,i]");
  dim_ = mats_.empty() ? 0 : mats_.front().rows();
  for (const auto& m : mats_)
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("MatrixARep: matrices must be square of equal size");
}

Matrix MatrixARep::action_of(const Polynomial& p) const { return evaluate_at_matrices(p, mats_, dim_); }

Matrix evaluate_at_matrices(const Polynomial& p, const std::vector<Matrix>& mats, std::size_t dim) {
  Matrix total(dim, dim);
  for (const auto& term : p.terms()) {
    Matrix m = Matrix::identity(dim) * term.coeff;
    for (const auto& [v, e] : term.monomial.entries())
      for (std::uint32_t k = 0; k < e; ++k) m = m * mats.at(v);
    total += m;
  }
  return total;
}

Report validate_arep(const MatrixARep& R) {
  const auto& A = *R.owner();
  Report report("A-module " + R.name());
  for (std::size_t v = 0; v < A.nvars(); ++v)
    for (std::size_t w = v + 1; w < A.nvars(); ++w) {
      const Matrix c = commutator(R.mats()[v], R.mats()[w]);
      if (!c.is_zero()) report.fail("commute", {v / A.d() + 1, v % A.d() + 1, w / A.d() + 1, w % A.d() + 1}, render_matrix(c));
    }
  for (const auto& lp : A.jgens()) {
    const Matrix m = R.action_of(lp.poly);
    if (!m.is_zero()) report.fail("relation", {lp.a, lp.i, lp.j}, render_matrix(m));
  }
  return report;
}

bool is_arep_morphism(const LinearMap& f, const MatrixARep& V, const MatrixARep& W) {
  if (!same_algebra(*V.owner(), *W.owner()))
    throw MismatchError("is_arep_morphism: modules over different algebras");
  if (f.source_dim() != V.dim() || f.target_dim() != W.dim()) throw DimensionError("is_arep_morphism: map does not fit");
  for (std::size_t v = 0; v < V.mats().size(); ++v)
    if (!(f.matrix() * V.mats()[v] == W.mats()[v] * f.matrix())) return false;
  return true;
}

std::vector<LinearMap> arep_morphisms(const MatrixARep& V, const MatrixARep& W) {
  std::vector<LinearMap> out;
  for (auto& t : intertwiners(V.mats(), W.mats(), V.dim(), W.dim())) out.emplace_back(std::move(t));
  return out;
}

MatrixARep counit_rep(const UniversalAlgebraPtr& B) {
  if (!B->is_bialgebra()) throw MismatchError("counit_rep: requires h = g");
  std::vector<Matrix> mats;
  for (std::size_t s = 0; s < B->n(); ++s)
    for (std::size_t i = 0; i < B->d(); ++i) mats.push_back(Matrix::identity(1) * Rational(s == i ? 1 : 0));
  return MatrixARep(B, std::move(mats), "k");
}

MatrixARep point_rep(const UniversalAlgebraPtr& A, const std::vector<Rational>& values) {
  if (values.size() != A->nvars()) throw DimensionError("point_rep: need one value per variable");
  std::vector<Matrix> mats;
  for (const auto& v : values) mats.push_back(Matrix::identity(1) * v);
  return MatrixARep(A, std::move(mats), "point");
}

MatrixARep direct_sum(const MatrixARep& a, const MatrixARep& b) {
  if (!same_algebra(*a.owner(), *b.owner())) throw MismatchError("direct_sum: modules over different algebras");
  std::vector<Matrix> mats;
  for (std::size_t v = 0; v < a.mats().size(); ++v) mats.push_back(block_diagonal(a.mats()[v], b.mats()[v]));
  return MatrixARep(a.owner(), std::move(mats), a.name() + "+" + b.name());
}

MatrixARep conjugate(const MatrixARep& R, const Matrix& Q) {
  const auto Qinv = inverse(Q);
  if (!Qinv) throw ValidationError("conjugate: matrix is singular");
  std::vector<Matrix> mats;
  for (const auto& m : R.mats()) mats.push_back(Q * m * *Qinv);
  return MatrixARep(R.owner(), std::move(mats), R.name());
}

TensorGModule tensor_lie_module(const LieModule& U, const MatrixARep& V) {
  const auto& A = *V.owner();
  if (!(*U.algebra() == *A.h())) throw MismatchError("tensor_lie_module: U is not a module over h");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < A.d(); ++i) {
    Matrix m(U.dim() * V.dim(), U.dim() * V.dim());
    for (std::size_t j = 0; j < A.n(); ++j) m += kron(U.action(j), V.mat(j, i));
    act.push_back(std::move(m));
  }
  return {LieModule(A.g(), std::move(act), U.name() + "(x)" + V.name())};
}

LinearMap tensor_on_morphism(const LieModule& U, const MatrixARep& V, const MatrixARep& W, const LinearMap& g) {
  if (!is_arep_morphism(g, V, W)) throw ValidationError("tensor_on_morphism: map is not an A-module morphism");
  return LinearMap(kron(Matrix::identity(U.dim()), g.matrix()));
}

LieModule induced_g_module(const MatrixARep& R) {
  const auto& A = *R.owner();
  if (A.n() != 1) throw MismatchError("induced_g_module: requires h = k");
  const Report r = validate_arep(R);
  if (!r.passed()) throw ValidationError("induced_g_module: representation violates the defining relations");
  std::vector<Matrix> act;
  for (std::size_t t = 0; t < A.d(); ++t) act.push_back(R.mat(0, t));
  return LieModule(A.g(), std::move(act), "ind(" + R.name() + ")");
}

LieModule induced_g_module_from_scalar_rep(const LieAlgebraPtr& g, const std::vector<Rational>& scalars) {
  if (scalars.size() != g->dim()) throw DimensionError("induced_g_module_from_scalar_rep: one scalar per basis element");
  for (std::size_t i = 0; i < g->dim(); ++i)
    for (std::size_t j = 0; j < g->dim(); ++j) {
      Rational sum;
      for (std::size_t u = 0; u < g->dim(); ++u) sum += g->constant(i, j, u) * scalars[u];
      if (!sum.is_zero())
        throw ValidationError("induced_g_module_from_scalar_rep: scalars do not vanish on [f_" + std::to_string(i + 1) +
                              ", f_" + std::to_string(j + 1) + "]");
    }
  std::vector<Matrix> act;
  for (const auto& c : scalars) act.push_back(Matrix::identity(1) * c);
  return LieModule(g, std::move(act), "scalar");
}

}  // namespace univalg
