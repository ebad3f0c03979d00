#include "univalg/lie.hpp"

#include "univalg/errors.hpp"

namespace univalg {

namespace {

std::string render(const Vector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].to_string();
  return out + ")";
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::size_t dim)
    : name_(std::move(name)), dim_(dim), c_(dim, dim, dim) {}

LieAlgebra::LieAlgebra(std::string name, StructureTable constants)
    : name_(std::move(name)), dim_(constants.extent(0)), c_(std::move(constants)) {
  if (c_.extent(1) != dim_ || c_.extent(2) != dim_)
    throw DimensionError("LieAlgebra: structure table must be dim x dim x dim");
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t s = 0; s < dim_; ++s) v[s] = c_.at(i, j, s);
  return v;
}

bool LieAlgebra::is_abelian() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t s = 0; s < dim_; ++s)
        if (!c_.at(i, j, s).is_zero()) return false;
  return true;
}

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y) {
  if (x.size() != L.dim() || y.size() != L.dim()) throw DimensionError("bracket: vector length mismatch");
  Vector out(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < L.dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t s = 0; s < L.dim(); ++s)
        if (!L.constant(i, j, s).is_zero()) out[s] += w * L.constant(i, j, s);
    }
  }
  return out;
}

Report validate_lie_algebra(const LieAlgebra& L) {
  Report report("lie algebra " + L.name());
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vector sum = add(L.bracket_basis(i, j), L.bracket_basis(j, i));
      if (!is_zero(sum)) report.fail("antisymmetry", {i + 1, j + 1}, render(sum));
    }
  auto e = [n](std::size_t k) {
    Vector v(n);
    v[k] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector jac = bracket(L, L.bracket_basis(i, j), e(k));
        jac = add(jac, bracket(L, L.bracket_basis(j, k), e(i)));
        jac = add(jac, bracket(L, L.bracket_basis(k, i), e(j)));
        if (!is_zero(jac)) report.fail("jacobi", {i + 1, j + 1, k + 1}, render(jac));
      }
  return report;
}

std::vector<Vector> derived_subalgebra(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Matrix rows(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < n; ++s) rows(i * n + j, s) = L.constant(i, j, s);
  const auto pivots = rref(rows);
  std::vector<Vector> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) basis.push_back(rows.row(r));
  return basis;
}

LieModule::LieModule(LieAlgebraPtr algebra, std::size_t dim)
    : algebra_(std::move(algebra)), dim_(dim) {
  action_.assign(algebra_->dim(), Matrix(dim, dim));
}

LieModule::LieModule(LieAlgebraPtr algebra, std::vector<Matrix> action, std::string name)
    : algebra_(std::move(algebra)), dim_(0), action_(std::move(action)), name_(std::move(name)) {
  if (action_.size() != algebra_->dim())
    throw DimensionError("LieModule: need one action matrix per algebra basis element");
  dim_ = action_.empty() ? 0 : action_.front().rows();
  for (const auto& m : action_)
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("LieModule: action matrices must be square");
}

Matrix LieModule::action_of(const Vector& x) const {
  if (x.size() != algebra_->dim()) throw DimensionError("LieModule::action_of: length mismatch");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m += action_[i] * x[i];
  return m;
}

Report validate_lie_module(const LieModule& M) {
  const LieAlgebra& L = *M.algebra();
  Report report("lie module " + M.name() + " over " + L.name());
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      const Matrix defect = M.action_of(L.bracket_basis(i, j)) - commutator(M.action(i), M.action(j));
      for (std::size_t v = 0; v < M.dim(); ++v) {
        const Vector col = defect.column(v);
        if (!is_zero(col)) report.fail("module-axiom", {i + 1, j + 1, v + 1}, render(col));
      }
    }
  return report;
}

Vector act(const LieModule& M, const Vector& x, const Vector& v) {
  if (v.size() != M.dim()) throw DimensionError("act: module vector length mismatch");
  return M.action_of(x) * v;
}

bool is_module_morphism(const LinearMap& f, const LieModule& M, const LieModule& N) {
  if (M.algebra()->dim() != N.algebra()->dim()) throw MismatchError("is_module_morphism: different algebras");
  if (f.source_dim() != M.dim() || f.target_dim() != N.dim())
    throw DimensionError("is_module_morphism: map does not fit the modules");
  for (std::size_t i = 0; i < M.algebra()->dim(); ++i)
    if (!(f.matrix() * M.action(i) == N.action(i) * f.matrix())) return false;
  return true;
}

std::vector<Matrix> intertwiners(const std::vector<Matrix>& src, const std::vector<Matrix>& dst,
                                 std::size_t src_dim, std::size_t dst_dim) {
  if (src.size() != dst.size()) throw DimensionError("intertwiners: operator families differ in size");
  // Unknown T (dst_dim x src_dim) flattened row-major; equation T*S - D*T = 0.
  const std::size_t unknowns = dst_dim * src_dim;
  Matrix system(src.size() * unknowns, unknowns);
  for (std::size_t k = 0; k < src.size(); ++k)
    for (std::size_t r = 0; r < dst_dim; ++r)
      for (std::size_t c = 0; c < src_dim; ++c) {
        const std::size_t eq = k * unknowns + r * src_dim + c;
        for (std::size_t m = 0; m < src_dim; ++m) system(eq, r * src_dim + m) += src[k](m, c);
        for (std::size_t m = 0; m < dst_dim; ++m) system(eq, m * src_dim + c) -= dst[k](r, m);
      }
  std::vector<Matrix> basis;
  for (const auto& v : nullspace(system)) {
    Matrix t(dst_dim, src_dim);
    for (std::size_t r = 0; r < dst_dim; ++r)
      for (std::size_t c = 0; c < src_dim; ++c) t(r, c) = v[r * src_dim + c];
    basis.push_back(std::move(t));
  }
  return basis;
}

std::vector<LinearMap> module_morphisms(const LieModule& M, const LieModule& N) {
  std::vector<LinearMap> out;
  for (auto& t : intertwiners(M.actions(), N.actions(), M.dim(), N.dim())) out.emplace_back(std::move(t));
  return out;
}

DirectSum direct_sum(const LieModule& a, const LieModule& b) {
  if (!(*a.algebra() == *b.algebra())) throw MismatchError("direct_sum: modules over different algebras");
  const std::size_t n = a.dim() + b.dim();
  std::vector<Matrix> act(a.algebra()->dim(), Matrix(n, n));
  for (std::size_t i = 0; i < act.size(); ++i) {
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c) act[i](r, c) = a.action(i)(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c) act[i](a.dim() + r, a.dim() + c) = b.action(i)(r, c);
  }
  Matrix i1(n, a.dim()), i2(n, b.dim()), p1(a.dim(), n), p2(b.dim(), n);
  for (std::size_t k = 0; k < a.dim(); ++k) i1(k, k) = p1(k, k) = 1;
  for (std::size_t k = 0; k < b.dim(); ++k) i2(a.dim() + k, k) = p2(k, a.dim() + k) = 1;
  return {LieModule(a.algebra(), std::move(act), a.name() + "+" + b.name()), LinearMap(i1), LinearMap(i2),
          LinearMap(p1), LinearMap(p2)};
}

}  // namespace univalg
