#include "univalg/universal_modules.hpp"

#include <set>

#include "univalg/errors.hpp"

namespace univalg {

namespace {

std::string render_vector(const Vector& v) {
  if (is_zero(v)) return "0";
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].to_string();
  return out + ")";
}

std::string pair_name(const char* stem, std::size_t a, std::size_t b) {
  return std::string(stem) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

std::vector<ModuleVector> images_from_matrix(const Matrix& m, const OrderPtr& order) {
  std::vector<ModuleVector> images(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (!m(r, c).is_zero()) images[c].set_component(r, Polynomial::constant(order, m(r, c)));
  return images;
}

// Flattens a matrix row-major.
Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

// Rank of the linear map unknown-matrix -> build(unknown), plus a check that
// solving it for `expected` returns `solution`. The unknown has shape rows x cols.
template <class Build>
void determination_system(FactorizationResult& result, std::size_t rows, std::size_t cols, const Build& build,
                          const Matrix& expected) {
  const std::size_t unknowns = rows * cols;
  const Vector target = flatten(expected);
  Matrix system(target.size(), unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    Matrix unit(rows, cols);
    unit(k / cols, k % cols) = 1;
    system.set_column(k, flatten(build(unit)));
  }
  result.unknowns = unknowns;
  result.system_rank = rank(system);
  const LinearSolution sol = solve(system, target);
  if (!sol.consistent || (sol.unique() && sol.particular != flatten(result.map)))
    throw StructuralError("factorization disagrees with the dense determination system");
}

}  // namespace

PresentedAModule present(const UniversalAlgebraPtr& A, std::size_t rank, std::vector<ModuleVector> relations,
                         std::vector<std::string> generator_names, const GroebnerOptions& options) {
  PresentedAModule p;
  p.algebra = A;
  p.rank = rank;
  p.mgb = module_buchberger(relations, A->gb(), rank, options);
  p.relations = std::move(relations);
  p.generator_names = std::move(generator_names);
  return p;
}

PresentedAModule direct_sum(const PresentedAModule& a, const PresentedAModule& b, const GroebnerOptions& options) {
  std::vector<ModuleVector> rels = a.relations;
  for (const auto& r : b.relations) {
    ModuleVector shifted;
    for (const auto& [pos, p] : r.components()) shifted.set_component(a.rank + pos, p);
    rels.push_back(std::move(shifted));
  }
  auto names = a.generator_names;
  for (const auto& n : b.generator_names) names.push_back(n + "'");
  return present(a.algebra, a.rank + b.rank, std::move(rels), std::move(names), options);
}

ModuleVector apply_generator_map(const ModuleVector& v, const std::vector<ModuleVector>& images) {
  ModuleVector out;
  for (const auto& [pos, p] : v.components()) out.add_multiple(images.at(pos), p);
  return out;
}

Vector evaluate_in(const ModuleVector& v, const MatrixARep& X, const Matrix& T) {
  Vector out(X.dim());
  for (const auto& [pos, p] : v.components()) {
    const Vector contribution = X.action_of(p) * T.column(pos);
    add_scaled(out, contribution, Rational(1));
  }
  return out;
}

UniversalAModule::UniversalAModule(UniversalAlgebraPtr A, LieModule U, LieModule Z, const GroebnerOptions& options)
    : A_(std::move(A)), U_(std::move(U)), Z_(std::move(Z)) {
  if (!(*U_.algebra() == *A_->h())) throw MismatchError("build_universal_amodule: U is not a module over h");
  if (!(*Z_.algebra() == *A_->g())) throw MismatchError("build_universal_amodule: Z is not a module over g");
  const std::size_t m = U_.dim(), z = Z_.dim();
  std::vector<std::string> names;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t r = 0; r < z; ++r) names.push_back(pair_name("Y", s + 1, r + 1));

  // sum_p eta(j)(p,i) Y[s,p] - sum_{t,r} omega(r)(s,t) X[r,j] Y[t,i]
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t i = 0; i < z; ++i)
      for (std::size_t j = 0; j < A_->d(); ++j) {
        ModuleVector rel;
        for (std::size_t p = 0; p < z; ++p)
          if (!Z_.action(j)(p, i).is_zero())
            rel += ModuleVector::single(position(s, p), A_->constant(Z_.action(j)(p, i)));
        for (std::size_t t = 0; t < m; ++t)
          for (std::size_t r = 0; r < A_->n(); ++r)
            if (!U_.action(r)(s, t).is_zero())
              rel -= ModuleVector::single(position(t, i), A_->x(r, j) * U_.action(r)(s, t));
        relgens_.push_back({s + 1, i + 1, j + 1, rel});
      }
  std::vector<ModuleVector> rels;
  for (const auto& lr : relgens_) rels.push_back(lr.vec);
  pres_ = present(A_, m * z, std::move(rels), std::move(names), options);

  relation_report_ = Report("relations of U(" + U_.name() + "," + Z_.name() + ")");
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t i = 0; i < z; ++i)
      for (std::size_t j = 0; j < A_->d(); ++j) {
        ModuleVector lhs, rhs;
        for (std::size_t p = 0; p < z; ++p)
          if (!Z_.action(j)(p, i).is_zero())
            lhs += ModuleVector::single(position(s, p), A_->constant(Z_.action(j)(p, i)));
        for (std::size_t t = 0; t < m; ++t)
          for (std::size_t r = 0; r < A_->n(); ++r)
            if (!U_.action(r)(s, t).is_zero())
              rhs += ModuleVector::single(position(t, i), A_->x(r, j) * U_.action(r)(s, t));
        relation_report_.record("relation", {s + 1, i + 1, j + 1},
                                pres_.render(pres_.normal_form(lhs) - pres_.normal_form(rhs)));
      }

  equivariance_report_ = Report("equivariance of rho");
  for (std::size_t j = 0; j < A_->d(); ++j)
    for (std::size_t r = 0; r < z; ++r) {
      Vector zr(z);
      zr[r] = 1;
      TensorElement diff = rho(Z_.action(j).column(r));
      const TensorElement acted = tensor_act(j, rho(zr));
      for (std::size_t s = 0; s < m; ++s) diff[s] -= acted[s];
      equivariance_report_.record("rho-equivariance", {j + 1, r + 1}, render(normal_form(diff)));
    }
}

TensorElement UniversalAModule::rho(const Vector& z) const {
  if (z.size() != Z_.dim()) throw DimensionError("rho: vector length differs from dim Z");
  TensorElement out(U_.dim());
  for (std::size_t s = 0; s < U_.dim(); ++s)
    for (std::size_t r = 0; r < Z_.dim(); ++r)
      if (!z[r].is_zero()) out[s] += ModuleVector::single(position(s, r), A_->constant(z[r]));
  return out;
}

TensorElement UniversalAModule::tensor_act(std::size_t j, const TensorElement& t) const {
  TensorElement out(U_.dim());
  for (std::size_t tt = 0; tt < U_.dim(); ++tt) {
    if (t[tt].is_zero()) continue;
    for (std::size_t r = 0; r < A_->n(); ++r)
      for (std::size_t s = 0; s < U_.dim(); ++s)
        if (!U_.action(r)(s, tt).is_zero()) out[s].add_multiple(t[tt], A_->x(r, j) * U_.action(r)(s, tt));
  }
  return normal_form(out);
}

TensorElement UniversalAModule::normal_form(const TensorElement& t) const {
  TensorElement out;
  for (const auto& v : t) out.push_back(pres_.normal_form(v));
  return out;
}

std::string UniversalAModule::render(const TensorElement& t) const {
  std::string out;
  for (std::size_t s = 0; s < t.size(); ++s) {
    if (t[s].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "u" + std::to_string(s + 1) + "(x)(" + pres_.render(t[s]) + ")";
  }
  return out.empty() ? "0" : out;
}

bool UniversalAModule::collapsed() const {
  for (std::size_t p = 0; p < rank(); ++p)
    if (!pres_.normal_form(pres_.generator(p)).is_zero()) return false;
  return true;
}

UniversalAModule build_universal_amodule(const UniversalAlgebraPtr& A, const LieModule& U, const LieModule& Z,
                                         const GroebnerOptions& options) {
  UniversalAModule UM(A, U, Z, options);
  if (!UM.relation_report().passed() || !UM.equivariance_report().passed())
    throw StructuralError("build_universal_amodule: presentation fails its own certificates");
  return UM;
}

Report check_well_defined(const UniversalAModule& UM, const MatrixARep& X, const Matrix& T) {
  if (T.rows() != X.dim() || T.cols() != UM.rank()) throw DimensionError("generator images have the wrong shape");
  Report report("relation images in " + X.name());
  for (const auto& lr : UM.relgens())
    report.record("relation-image", {lr.s, lr.i, lr.j}, render_vector(evaluate_in(lr.vec, X, T)));
  return report;
}

namespace {

Matrix gamma_matrix(const UniversalAModule& UM, std::size_t dim_x, const Matrix& T) {
  const std::size_t m = UM.U().dim(), z = UM.Z().dim();
  Matrix out(m * dim_x, z);
  for (std::size_t r = 0; r < z; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t q = 0; q < dim_x; ++q) out(s * dim_x + q, r) = T(q, UM.position(s, r));
  return out;
}

}  // namespace

FactorizationResult factorize_through_universal(const UniversalAModule& UM, const MatrixARep& X, const LinearMap& f) {
  const LieModule target = tensor_lie_module(UM.U(), X).result;
  const std::size_t m = UM.U().dim(), z = UM.Z().dim(), l = X.dim();
  if (f.source_dim() != z || f.target_dim() != m * l) throw DimensionError("factorize: f has the wrong shape");
  if (!is_module_morphism(f, UM.Z(), target)) throw ValidationError("factorize: f is not a Lie g-module morphism");
  FactorizationResult result;
  result.map = Matrix(l, UM.rank());
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t r = 0; r < z; ++r)
      for (std::size_t q = 0; q < l; ++q) result.map(q, UM.position(s, r)) = f.matrix()(s * l + q, r);
  result.witness = check_well_defined(UM, X, result.map);
  if (!result.witness.passed()) throw StructuralError("factorize: a relation has a nonzero image");
  result.commutes = gamma_matrix(UM, l, result.map) == f.matrix();
  determination_system(result, l, UM.rank(), [&](const Matrix& G) { return gamma_matrix(UM, l, G); }, f.matrix());
  return result;
}

LinearMap gamma(const UniversalAModule& UM, const MatrixARep& X, const Matrix& theta) {
  if (!check_well_defined(UM, X, theta).passed()) throw ValidationError("gamma: theta does not kill the relations");
  return LinearMap(gamma_matrix(UM, X.dim(), theta));
}

PresentedMap functor_on_morphism_U(const UniversalAModule& source, const UniversalAModule& target, const LinearMap& f) {
  if (!(*source.U().algebra() == *target.U().algebra()) || !(source.U().actions() == target.U().actions()))
    throw MismatchError("functor_on_morphism_U: different U");
  if (f.source_dim() != source.Z().dim() || f.target_dim() != target.Z().dim())
    throw DimensionError("functor_on_morphism_U: f has the wrong shape");
  if (!is_module_morphism(f, source.Z(), target.Z()))
    throw ValidationError("functor_on_morphism_U: f is not a Lie g-module morphism");
  PresentedMap out;
  out.matrix = Matrix(target.rank(), source.rank());
  for (std::size_t s = 0; s < source.U().dim(); ++s)
    for (std::size_t r = 0; r < source.Z().dim(); ++r)
      for (std::size_t q = 0; q < target.Z().dim(); ++q)
        out.matrix(target.position(s, q), source.position(s, r)) = f.matrix()(q, r);
  const OrderPtr& order = target.algebra()->order();
  out.images = images_from_matrix(out.matrix, order);
  out.certificate = Report("functor on morphism");
  for (const auto& lr : source.relgens()) {
    const ModuleVector img = target.presentation().normal_form(apply_generator_map(lr.vec, out.images));
    out.certificate.record("relation-preserved", {lr.s, lr.i, lr.j}, target.presentation().render(img));
  }
  return out;
}

namespace {

// Block permutation between generators of a sum over W1 (+) W2 and the
// concatenated summand generators. Generators are indexed (a, r) with r the
// W-index; index_of(a, r, wdim) gives the position.
template <class Index>
Matrix split_matrix(std::size_t outer, std::size_t w1, std::size_t w2, std::size_t rank1, const Index& sum_index,
                    const Index& part_index) {
  const std::size_t total = outer * (w1 + w2);
  Matrix forward(total, total);
  for (std::size_t a = 0; a < outer; ++a)
    for (std::size_t r = 0; r < w1 + w2; ++r) {
      const std::size_t from = sum_index(a, r, w1 + w2);
      const std::size_t to = r < w1 ? part_index(a, r, w1) : rank1 + part_index(a, r - w1, w2);
      forward(to, from) = 1;
    }
  return forward;
}

void record_compositions(DirectSumCertificate& cert) {
  const std::size_t n = cert.forward.rows();
  const Matrix bf = cert.backward * cert.forward;
  const Matrix fb = cert.forward * cert.backward;
  for (std::size_t p = 0; p < n; ++p) {
    Vector unit(n);
    unit[p] = 1;
    cert.report.record("backward-after-forward", {p + 1}, render_vector(add(bf.column(p), scale(unit, -1))));
    cert.report.record("forward-after-backward", {p + 1}, render_vector(add(fb.column(p), scale(unit, -1))));
  }
}

}  // namespace

DirectSumCertificate direct_sum_check(const UniversalAlgebraPtr& A, const LieModule& U, const LieModule& W1,
                                      const LieModule& W2) {
  const DirectSum ds = direct_sum(W1, W2);
  const UniversalAModule sum = build_universal_amodule(A, U, ds.sum);
  const UniversalAModule one = build_universal_amodule(A, U, W1);
  const UniversalAModule two = build_universal_amodule(A, U, W2);
  const PresentedAModule split = direct_sum(one.presentation(), two.presentation());

  DirectSumCertificate cert;
  // U-side generators Y[s,r] sit at s*|W| + r.
  auto index = [](std::size_t s, std::size_t r, std::size_t wdim) { return s * wdim + r; };
  cert.forward = split_matrix(U.dim(), W1.dim(), W2.dim(), one.rank(), index, index);
  cert.backward = cert.forward.transpose();
  cert.report = Report("U(U, W1 (+) W2) = U(U,W1) (+) U(U,W2)");
  const OrderPtr& order = A->order();
  const auto fwd = images_from_matrix(cert.forward, order);
  const auto bwd = images_from_matrix(cert.backward, order);
  for (const auto& lr : sum.relgens())
    cert.report.record("forward-relation", {lr.s, lr.i, lr.j},
                       split.render(split.normal_form(apply_generator_map(lr.vec, fwd))));
  for (std::size_t k = 0; k < split.relations.size(); ++k)
    cert.report.record("backward-relation", {k + 1},
                       sum.presentation().render(sum.presentation().normal_form(
                           apply_generator_map(split.relations[k], bwd))));
  record_compositions(cert);
  // Round trips through normal forms of both presentations.
  for (std::size_t p = 0; p < sum.rank(); ++p) {
    const ModuleVector y = sum.presentation().generator(p);
    const ModuleVector back = apply_generator_map(apply_generator_map(y, fwd), bwd);
    cert.report.record("generator-roundtrip", {p + 1},
                       sum.presentation().render(sum.presentation().normal_form(back - y)));
  }
  return cert;
}

void FreeLieElement::add(std::size_t pos, const PBWElement& x) {
  if (x.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(pos, x);
  if (!inserted) {
    it->second += x;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

FreeLieElement& FreeLieElement::operator+=(const FreeLieElement& o) {
  for (const auto& [pos, x] : o.comps_) add(pos, x);
  return *this;
}

FreeLieElement& FreeLieElement::operator*=(const Rational& s) {
  if (s.is_zero()) comps_.clear();
  for (auto& [pos, x] : comps_) x *= s;
  return *this;
}

FreeLieElement FreeLieElement::act(const LieAlgebra& h, std::uint32_t t) const {
  FreeLieElement out;
  for (const auto& [pos, x] : comps_) out.add(pos, multiply(h, PBWElement::word({t}), x));
  return out;
}

std::string FreeLieElement::to_string(const std::vector<std::string>& generator_names) const {
  if (comps_.empty()) return "0";
  std::string out;
  for (const auto& [pos, x] : comps_) {
    if (!out.empty()) out += " + ";
    const std::string body = x.to_string();
    out += (x == PBWElement::one() ? "" : "(" + body + ")*") + generator_names.at(pos);
  }
  return out;
}

UniversalLieHModule::UniversalLieHModule(MatrixARep V, LieModule W) : V_(std::move(V)), W_(std::move(W)) {
  const auto& A = *V_.owner();
  if (!(*W_.algebra() == *A.g())) throw MismatchError("build_universal_lie_hmodule: W is not a module over g");
  const std::size_t l = V_.dim(), w = W_.dim();
  for (std::size_t r = 0; r < w; ++r)
    for (std::size_t s = 0; s < l; ++s) names_.push_back(pair_name("Y", r + 1, s + 1));
  // sum_p sigma(j)(p,r) Y[p,s] - sum_{k,t} gamma(t,j)(s,k) e_t Y[r,k]
  for (std::size_t s = 0; s < l; ++s)
    for (std::size_t r = 0; r < w; ++r)
      for (std::size_t j = 0; j < A.d(); ++j) {
        FreeLieElement rel;
        for (std::size_t p = 0; p < w; ++p) rel.add(position(p, s), PBWElement::one() * W_.action(j)(p, r));
        for (std::size_t k = 0; k < l; ++k)
          for (std::size_t t = 0; t < A.n(); ++t)
            rel.add(position(r, k), PBWElement::word({static_cast<std::uint32_t>(t)}) * -V_.mat(t, j)(s, k));
        relgens_.push_back({{s + 1, r + 1, j + 1}, std::move(rel)});
      }
}

std::vector<FreeLieElement> UniversalLieHModule::tau(std::size_t r) const {
  std::vector<FreeLieElement> out(V_.dim());
  for (std::size_t s = 0; s < V_.dim(); ++s) out[s].add(position(r, s), PBWElement::one());
  return out;
}

Vector UniversalLieHModule::evaluate_in(const FreeLieElement& x, const LieModule& Y, const Matrix& C) const {
  Vector out(Y.dim());
  for (const auto& [pos, p] : x.components()) add_scaled(out, pbw_action(Y, p) * C.column(pos), Rational(1));
  return out;
}

UniversalLieHModule build_universal_lie_hmodule(const MatrixARep& V, const LieModule& W) {
  return UniversalLieHModule(V, W);
}

Report check_well_defined_lie(const UniversalLieHModule& VM, const LieModule& Y, const Matrix& C) {
  if (C.rows() != Y.dim() || C.cols() != VM.rank()) throw DimensionError("generator images have the wrong shape");
  Report report("relation images in " + Y.name());
  for (const auto& [label, rel] : VM.relgens())
    report.record("relation-image", {label[0], label[1], label[2]}, render_vector(VM.evaluate_in(rel, Y, C)));
  return report;
}

namespace {

Matrix gamma_lie_matrix(const UniversalLieHModule& VM, std::size_t dim_y, const Matrix& C) {
  const std::size_t l = VM.V().dim(), w = VM.W().dim();
  Matrix out(dim_y * l, w);
  for (std::size_t r = 0; r < w; ++r)
    for (std::size_t a = 0; a < dim_y; ++a)
      for (std::size_t s = 0; s < l; ++s) out(a * l + s, r) = C(a, VM.position(r, s));
  return out;
}

// Coordinates of FreeLieElements over a shared (position, word) index.
struct Coordinates {
  std::map<std::pair<std::size_t, Word>, std::size_t> index;
  void collect(const FreeLieElement& x) {
    for (const auto& [pos, p] : x.components())
      for (const auto& [w, c] : p.terms()) index.try_emplace({pos, w}, index.size());
  }
  Vector of(const FreeLieElement& x) const {
    Vector v(index.size());
    for (const auto& [pos, p] : x.components())
      for (const auto& [w, c] : p.terms()) v[index.at({pos, w})] = c;
    return v;
  }
};

// Whether each image lies in the span of `relations`; records one item per image.
void record_span(Report& report, const std::string& check, const std::vector<std::array<std::size_t, 3>>& labels,
                 const std::vector<FreeLieElement>& images, const std::vector<FreeLieElement>& relations) {
  Coordinates coords;
  for (const auto& r : relations) coords.collect(r);
  for (const auto& x : images) coords.collect(x);
  Matrix span(coords.index.size(), relations.size());
  for (std::size_t k = 0; k < relations.size(); ++k) span.set_column(k, coords.of(relations[k]));
  for (std::size_t k = 0; k < images.size(); ++k) {
    const bool inside = solve(span, coords.of(images[k])).consistent;
    report.record(check, {labels[k][0], labels[k][1], labels[k][2]}, inside ? "0" : "outside relation span");
  }
}

FreeLieElement map_generators(const FreeLieElement& x, const Matrix& M) {
  FreeLieElement out;
  for (const auto& [pos, p] : x.components())
    for (std::size_t q = 0; q < M.rows(); ++q)
      if (!M(q, pos).is_zero()) out.add(q, p * M(q, pos));
  return out;
}

}  // namespace

FactorizationResult factorize_lie(const UniversalLieHModule& VM, const LieModule& Y, const LinearMap& f) {
  const LieModule target = tensor_lie_module(Y, VM.V()).result;
  const std::size_t l = VM.V().dim(), w = VM.W().dim(), dy = Y.dim();
  if (f.source_dim() != w || f.target_dim() != dy * l) throw DimensionError("factorize_lie: f has the wrong shape");
  if (!is_module_morphism(f, VM.W(), target)) throw ValidationError("factorize_lie: f is not a Lie g-module morphism");
  FactorizationResult result;
  result.map = Matrix(dy, VM.rank());
  for (std::size_t r = 0; r < w; ++r)
    for (std::size_t s = 0; s < l; ++s)
      for (std::size_t a = 0; a < dy; ++a) result.map(a, VM.position(r, s)) = f.matrix()(a * l + s, r);
  result.witness = check_well_defined_lie(VM, Y, result.map);
  if (!result.witness.passed()) throw StructuralError("factorize_lie: a relation has a nonzero image");
  result.commutes = gamma_lie_matrix(VM, dy, result.map) == f.matrix();
  determination_system(result, dy, VM.rank(), [&](const Matrix& C) { return gamma_lie_matrix(VM, dy, C); },
                       f.matrix());
  return result;
}

LinearMap gamma_lie(const UniversalLieHModule& VM, const LieModule& Y, const Matrix& theta) {
  if (!check_well_defined_lie(VM, Y, theta).passed()) throw ValidationError("gamma_lie: theta does not kill the relations");
  return LinearMap(gamma_lie_matrix(VM, Y.dim(), theta));
}

PresentedLieMap functor_on_morphism_V(const UniversalLieHModule& source, const UniversalLieHModule& target,
                                      const LinearMap& f) {
  if (!(source.V().mats() == target.V().mats())) throw MismatchError("functor_on_morphism_V: different V");
  if (f.source_dim() != source.W().dim() || f.target_dim() != target.W().dim())
    throw DimensionError("functor_on_morphism_V: f has the wrong shape");
  if (!is_module_morphism(f, source.W(), target.W()))
    throw ValidationError("functor_on_morphism_V: f is not a Lie g-module morphism");
  PresentedLieMap out;
  const std::size_t l = source.V().dim();
  out.matrix = Matrix(target.rank(), source.rank());
  for (std::size_t r = 0; r < source.W().dim(); ++r)
    for (std::size_t q = 0; q < target.W().dim(); ++q)
      for (std::size_t s = 0; s < l; ++s) out.matrix(target.position(q, s), source.position(r, s)) = f.matrix()(q, r);
  std::vector<std::array<std::size_t, 3>> labels;
  std::vector<FreeLieElement> images, rels;
  for (const auto& [label, rel] : source.relgens()) {
    labels.push_back(label);
    images.push_back(map_generators(rel, out.matrix));
  }
  for (const auto& [label, rel] : target.relgens()) rels.push_back(rel);
  out.certificate = Report("functor on morphism");
  record_span(out.certificate, "relation-preserved", labels, images, rels);
  return out;
}

DirectSumCertificate direct_sum_check_lie(const MatrixARep& V, const LieModule& W1, const LieModule& W2) {
  const DirectSum ds = direct_sum(W1, W2);
  const UniversalLieHModule sum(V, ds.sum), one(V, W1), two(V, W2);
  const std::size_t l = V.dim();
  DirectSumCertificate cert;
  // V-side generators Y[r,s] sit at r*l + s; the W-index is the outer one.
  auto sum_index = [l](std::size_t s, std::size_t r, std::size_t) { return r * l + s; };
  cert.forward = split_matrix(l, W1.dim(), W2.dim(), one.rank(), sum_index, sum_index);
  cert.backward = cert.forward.transpose();
  cert.report = Report("V(V, W1 (+) W2) = V(V,W1) (+) V(V,W2)");

  std::vector<FreeLieElement> split_rels, sum_rels, fwd_images, bwd_images;
  std::vector<std::array<std::size_t, 3>> sum_labels, split_labels;
  for (const auto& [label, rel] : one.relgens()) {
    split_rels.push_back(rel);
    split_labels.push_back(label);
  }
  Matrix shift(one.rank() + two.rank(), two.rank());
  for (std::size_t p = 0; p < two.rank(); ++p) shift(one.rank() + p, p) = 1;
  for (const auto& [label, rel] : two.relgens()) {
    split_rels.push_back(map_generators(rel, shift));
    split_labels.push_back({label[0], label[1] + W1.dim(), label[2]});
  }
  for (const auto& [label, rel] : sum.relgens()) {
    sum_rels.push_back(rel);
    sum_labels.push_back(label);
    fwd_images.push_back(map_generators(rel, cert.forward));
  }
  for (const auto& rel : split_rels) bwd_images.push_back(map_generators(rel, cert.backward));
  record_span(cert.report, "forward-relation", sum_labels, fwd_images, split_rels);
  record_span(cert.report, "backward-relation", split_labels, bwd_images, sum_rels);
  record_compositions(cert);
  return cert;
}

}  // namespace univalg
