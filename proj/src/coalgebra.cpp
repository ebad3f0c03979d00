#include "univalg/coalgebra.hpp"

#include <array>

#include "univalg/errors.hpp"

namespace univalg {

namespace {

std::string render_vector(const Vector& v) {
  if (is_zero(v)) return "0";
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].to_string();
  return out + ")";
}

Matrix column_matrix(const Vector& v) { return Matrix::from_columns({v}, v.size()); }

Vector kron_vectors(const Vector& a, const Vector& b) { return kron(column_matrix(a), column_matrix(b)).column(0); }

bool same_module(const LieModule& a, const LieModule& b) {
  return *a.algebra() == *b.algebra() && a.actions() == b.actions();
}

}  // namespace

TensorSquareElement TensorSquareElement::pure(const ModuleVector& a, const ModuleVector& b) {
  TensorSquareElement out;
  for (const auto& [pa, qa] : a.components())
    for (const auto& ta : qa.terms())
      for (const auto& [pb, qb] : b.components())
        for (const auto& tb : qb.terms()) out.add_term({pa, ta.monomial, pb, tb.monomial}, ta.coeff * tb.coeff);
  return out;
}

void TensorSquareElement::add_term(const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorSquareElement& TensorSquareElement::operator+=(const TensorSquareElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorSquareElement& TensorSquareElement::operator-=(const TensorSquareElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TensorSquare::TensorSquare(const UniversalAModule& UM, const BialgebraStructure& bialgebra)
    : owner_(&UM), bialgebra_(&bialgebra) {
  if (!UM.algebra()->is_bialgebra()) throw MismatchError("tensor square: requires h = g");
}

TensorSquareElement TensorSquare::normal_form(const TensorSquareElement& t) const {
  const auto& pres = owner_->presentation();
  const OrderPtr& order = owner_->algebra()->order();
  auto nf = [&](std::size_t pos, const Monomial& m) -> const ModuleVector& {
    auto it = cache_.find({pos, m});
    if (it == cache_.end())
      it = cache_.emplace(std::make_pair(pos, m), pres.normal_form(ModuleVector::single(pos, Polynomial::monomial(order, m))))
               .first;
    return it->second;
  };
  TensorSquareElement out;
  for (const auto& [key, c] : t.terms()) {
    const auto& [pl, ml, pr, mr] = key;
    TensorSquareElement piece = TensorSquareElement::pure(nf(pl, ml), nf(pr, mr));
    for (const auto& [k, v] : piece.terms()) out.add_term(k, v * c);
  }
  return out;
}

TensorSquareElement TensorSquare::act_tensor(const Polynomial& q, const TensorSquareElement& t) const {
  const std::uint32_t half = static_cast<std::uint32_t>(owner_->algebra()->nvars());
  TensorSquareElement out;
  for (const auto& term : q.terms()) {
    std::vector<Monomial::Entry> left, right;
    for (const auto& [v, e] : term.monomial.entries()) {
      if (v < half) left.emplace_back(v, e);
      else right.emplace_back(v - half, e);
    }
    const Monomial ml(left), mr(right);
    for (const auto& [key, c] : t.terms()) {
      const auto& [pl, al, pr, ar] = key;
      out.add_term({pl, al * ml, pr, ar * mr}, c * term.coeff);
    }
  }
  return out;
}

TensorSquareElement TensorSquare::act(const Polynomial& p, const TensorSquareElement& t) const {
  return act_tensor(bialgebra_->delta(p), t);
}

std::string TensorSquare::render(const TensorSquareElement& t) const {
  if (t.is_zero()) return "0";
  const auto& pres = owner_->presentation();
  const OrderPtr& order = owner_->algebra()->order();
  std::string out;
  for (const auto& [key, c] : t.terms()) {
    const auto& [pl, ml, pr, mr] = key;
    if (!out.empty()) out += " + ";
    out += c.to_string() + "*(" + pres.render(ModuleVector::single(pl, Polynomial::monomial(order, ml))) + ")(x)(" +
           pres.render(ModuleVector::single(pr, Polynomial::monomial(order, mr))) + ")";
  }
  return out;
}

Report bmodule_on_tensor_square(const UniversalAModule& UM, const BialgebraStructure& bialgebra) {
  const TensorSquare sq(UM, bialgebra);
  const auto& pres = UM.presentation();
  Report report("B-module structures on U(U)(x)U(U) and k");
  for (const auto& lp : UM.algebra()->jgens()) {
    std::string witness = "0";
    for (std::size_t p = 0; p < UM.rank() && witness == "0"; ++p)
      for (std::size_t q = 0; q < UM.rank() && witness == "0"; ++q) {
        const TensorSquareElement r = sq.normal_form(sq.act(lp.poly, TensorSquareElement::pure(pres.generator(p), pres.generator(q))));
        if (!r.is_zero()) witness = sq.render(r);
      }
    report.record("tensor-square-relation", {lp.a, lp.i, lp.j}, witness);
  }
  const MatrixARep k = counit_rep(UM.algebra());
  for (const auto& lp : UM.algebra()->jgens())
    report.record("ground-field-relation", {lp.a, lp.i, lp.j}, k.action_of(lp.poly).is_zero() ? "0" : k.action_of(lp.poly).to_string());
  return report;
}

namespace {

// Generator-level Delta: y_lt -> pairs (y_ls, y_st).
std::vector<std::pair<std::size_t, std::size_t>> delta_pairs(const UniversalAModule& UM, std::size_t pos) {
  const std::size_t m = UM.U().dim();
  const std::size_t l = pos / m, t = pos % m;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 0; s < m; ++s) out.emplace_back(UM.position(l, s), UM.position(s, t));
  return out;
}

// (rho (x) id) rho (u_r), component p being the coefficient of u_p.
std::vector<TensorSquareElement> double_coaction(const UniversalAModule& UM, std::size_t r) {
  const std::size_t m = UM.U().dim();
  Vector ur(m);
  ur[r] = 1;
  const TensorElement first = UM.rho(ur);
  std::vector<TensorSquareElement> out(m);
  for (std::size_t s = 0; s < m; ++s) {
    if (first[s].is_zero()) continue;
    Vector us(m);
    us[s] = 1;
    const TensorElement second = UM.rho(us);
    for (std::size_t p = 0; p < m; ++p) out[p] += TensorSquareElement::pure(second[p], first[s]);
  }
  return out;
}

}  // namespace

CoalgebraOnU::CoalgebraOnU(const UniversalAModule& UM, const BialgebraStructure& bialgebra)
    : owner_(&UM), square_(UM, bialgebra) {
  if (!same_module(UM.U(), UM.Z())) throw MismatchError("build_coalgebra: requires Z = U");
  const std::size_t m = UM.U().dim();
  const auto& pres = UM.presentation();
  eps_ = Matrix(1, UM.rank());
  for (std::size_t l = 0; l < m; ++l) eps_(0, UM.position(l, l)) = 1;

  report_ = Report("coalgebra on U(" + UM.U().name() + ")");
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t t = 0; t < m; ++t) {
      const std::size_t pos = UM.position(l, t);
      std::map<std::array<std::size_t, 3>, Rational> left, right;
      for (const auto& [a, b] : delta_pairs(UM, pos)) {
        for (const auto& [c, d] : delta_pairs(UM, a)) left[{c, d, b}] += 1;
        for (const auto& [c, d] : delta_pairs(UM, b)) right[{a, c, d}] += 1;
      }
      report_.record("coassociativity", {l + 1, t + 1}, left == right ? "0" : "sides differ");
      ModuleVector eps_left, eps_right;
      for (const auto& [a, b] : delta_pairs(UM, pos)) {
        eps_left += pres.generator(b) * eps_(0, a);
        eps_right += pres.generator(a) * eps_(0, b);
      }
      report_.record("left-counit", {l + 1, t + 1}, pres.render(pres.normal_form(eps_left - pres.generator(pos))));
      report_.record("right-counit", {l + 1, t + 1}, pres.render(pres.normal_form(eps_right - pres.generator(pos))));
    }
  const MatrixARep k = counit_rep(UM.algebra());
  for (const auto& lr : UM.relgens())
    report_.record("counit-kills-relation", {lr.s, lr.i, lr.j}, render_vector(evaluate_in(lr.vec, k, eps_)));
  for (const auto& lr : UM.relgens())
    report_.record("delta-kills-relation", {lr.s, lr.i, lr.j}, square_.render(delta(lr.vec)));

  // The same maps from the universal property: eps factors can_U, Delta the
  // double coaction.
  const FactorizationResult eps_fact = factorize_through_universal(UM, k, LinearMap::identity(m));
  report_.record("counit-by-factorization", {}, eps_fact.map == eps_ && eps_fact.unique() ? "0" : eps_fact.map.to_string());
  for (std::size_t r = 0; r < m; ++r) {
    const auto components = double_coaction(UM, r);
    for (std::size_t p = 0; p < m; ++p) {
      const TensorSquareElement diff =
          square_.normal_form(components[p] - delta(pres.generator(UM.position(p, r))));
      report_.record("delta-by-factorization", {p + 1, r + 1}, square_.render(diff));
    }
  }
}

TensorSquareElement CoalgebraOnU::delta(const ModuleVector& v) const {
  const auto& pres = owner_->presentation();
  TensorSquareElement out;
  for (const auto& [pos, p] : v.components()) {
    TensorSquareElement d;
    for (const auto& [a, b] : delta_pairs(*owner_, pos)) d += TensorSquareElement::pure(pres.generator(a), pres.generator(b));
    out += square_.act(p, d);
  }
  return square_.normal_form(out);
}

Rational CoalgebraOnU::epsilon(const ModuleVector& v) const {
  return evaluate_in(v, counit_rep(owner_->algebra()), eps_)[0];
}

CoalgebraOnU build_coalgebra(const UniversalAModule& UM, const BialgebraStructure& bialgebra) {
  CoalgebraOnU C(UM, bialgebra);
  if (!C.report().passed()) throw StructuralError("build_coalgebra: a coalgebra certificate failed");
  return C;
}

Report verify_comodule(const CoalgebraOnU& C) {
  const UniversalAModule& UM = C.owner();
  const std::size_t m = UM.U().dim();
  const auto& sq = C.square();
  Report report("U as a right U(U)-comodule");
  for (std::size_t r = 0; r < m; ++r) {
    Vector ur(m);
    ur[r] = 1;
    const TensorElement coaction = UM.rho(ur);
    const auto left = double_coaction(UM, r);
    std::string witness = "0";
    for (std::size_t s = 0; s < m; ++s) {
      const TensorSquareElement diff = sq.normal_form(left[s] - C.delta(coaction[s]));
      if (!diff.is_zero()) witness = "u" + std::to_string(s + 1) + ": " + sq.render(diff);
    }
    report.record("coassociative-coaction", {r + 1}, witness);
    Vector counit(m);
    for (std::size_t s = 0; s < m; ++s) counit[s] = C.epsilon(coaction[s]);
    report.record("counit-coaction", {r + 1}, render_vector(add(counit, scale(ur, -1))));
  }
  return report;
}

Report verify_bmodule_coalgebra(const CoalgebraOnU& C) {
  const UniversalAModule& UM = C.owner();
  const auto& A = *UM.algebra();
  const auto& pres = UM.presentation();
  const auto& sq = C.square();
  const std::size_t n = A.n(), m = UM.U().dim();
  Report report("U(U) as a B-module coalgebra");
  auto act = [&](std::size_t a, std::size_t b, std::size_t pos) {
    return pres.normal_form(ModuleVector::single(pos, A.x(a, b)));
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t t = 0; t < m; ++t) {
          const ModuleVector v = act(a, b, UM.position(l, t));
          TensorSquareElement rhs;
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t s = 0; s < m; ++s)
              rhs += TensorSquareElement::pure(act(a, c, UM.position(l, s)), act(c, b, UM.position(s, t)));
          report.record("delta-of-product", {a + 1, b + 1, l + 1, t + 1},
                        sq.render(sq.normal_form(C.delta(v) - rhs)));
          const Rational expected = (a == b && l == t) ? 1 : 0;
          report.record("counit-of-product", {a + 1, b + 1, l + 1, t + 1}, (C.epsilon(v) - expected).to_string());
        }
  return report;
}

Report validate_finite_coalgebra(const FiniteCoalgebra& X) {
  const std::size_t d = X.module.dim();
  Report report("finite coalgebra " + X.module.name());
  if (X.delta.rows() != d * d || X.delta.cols() != d || X.epsilon.size() != d)
    throw DimensionError("finite coalgebra: delta must be dim^2 x dim and epsilon of length dim");
  report.append(validate_arep(X.module));
  const Matrix I = Matrix::identity(d);
  const Matrix eps = Matrix::from_rows({X.epsilon});
  const Matrix coassoc = kron(X.delta, I) * X.delta - kron(I, X.delta) * X.delta;
  if (!coassoc.is_zero()) report.fail("coassociativity", {}, coassoc.to_string());
  const Matrix left = kron(eps, I) * X.delta - I, right = kron(I, eps) * X.delta - I;
  if (!left.is_zero()) report.fail("left-counit", {}, left.to_string());
  if (!right.is_zero()) report.fail("right-counit", {}, right.to_string());
  return report;
}

CoalgebraMapResult universal_coalgebra_map(const CoalgebraOnU& C, const FiniteCoalgebra& X, const LinearMap& psi) {
  const UniversalAModule& UM = C.owner();
  const std::size_t m = UM.U().dim(), d = X.module.dim();
  if (!validate_finite_coalgebra(X).passed()) throw ValidationError("universal_coalgebra_map: X is not a coalgebra over B");
  if (psi.source_dim() != m || psi.target_dim() != m * d) throw DimensionError("universal_coalgebra_map: psi has the wrong shape");
  const Matrix Im = Matrix::identity(m), Id = Matrix::identity(d);
  const Matrix eps = Matrix::from_rows({X.epsilon});
  if (!(kron(psi.matrix(), Id) * psi.matrix() == kron(Im, X.delta) * psi.matrix()) ||
      !(kron(Im, eps) * psi.matrix() == Im))
    throw ValidationError("universal_coalgebra_map: psi is not a right X-coaction");
  // Throws ValidationError if psi is not a Lie h-module map into U (x) X.
  const FactorizationResult fact = factorize_through_universal(UM, X.module, psi);
  CoalgebraMapResult out{fact.map, Report("universal coalgebra map")};
  out.report.append(fact.witness);
  const Matrix& theta = out.theta;
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t t = 0; t < m; ++t) {
      Vector rhs(d * d);
      for (std::size_t s = 0; s < m; ++s)
        add_scaled(rhs, kron_vectors(theta.column(UM.position(l, s)), theta.column(UM.position(s, t))), Rational(1));
      const Vector lhs = X.delta * theta.column(UM.position(l, t));
      out.report.record("coalgebra-map-delta", {l + 1, t + 1}, render_vector(add(lhs, scale(rhs, -1))));
      Rational e;
      for (std::size_t k = 0; k < d; ++k) e += X.epsilon[k] * theta(k, UM.position(l, t));
      out.report.record("coalgebra-map-counit", {l + 1, t + 1}, (e - Rational(l == t ? 1 : 0)).to_string());
    }
  out.report.record("diagram", {}, fact.commutes ? "0" : "(id (x) theta) rho differs from psi");
  out.report.record("unique", {}, fact.unique() ? "0" : "determination system is not of full rank");
  return out;
}

}  // namespace univalg
