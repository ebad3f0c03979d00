#include "univalg/universal_algebra.hpp"

#include <algorithm>
#include <functional>

#include "univalg/errors.hpp"

namespace univalg {

namespace {

std::string label(std::size_t a, std::size_t b) {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

}  // namespace

std::vector<std::string> universal_variable_names(std::size_t n, std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t s = 1; s <= n; ++s)
    for (std::size_t i = 1; i <= d; ++i) names.push_back("X" + label(s, i));
  return names;
}

std::vector<LabeledPolynomial> universal_polynomials(const LieAlgebra& h, const LieAlgebra& g,
                                                     const OrderPtr& order) {
  const std::size_t n = h.dim(), d = g.dim();
  if (order->nvars() != n * d) throw DimensionError("universal_polynomials: order has the wrong variable count");
  auto var = [d](std::size_t s, std::size_t i) { return static_cast<std::uint32_t>(s * d + i); };
  std::vector<LabeledPolynomial> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<Term> terms;
        for (std::size_t u = 0; u < d; ++u)
          if (!g.constant(i, j, u).is_zero()) terms.push_back({Monomial({{var(a, u), 1}}), g.constant(i, j, u)});
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t t = 0; t < n; ++t)
            if (!h.constant(s, t, a).is_zero())
              terms.push_back({Monomial({{var(s, i), 1}}) * Monomial({{var(t, j), 1}}), -h.constant(s, t, a)});
        out.push_back({a + 1, i + 1, j + 1, Polynomial(order, std::move(terms))});
      }
  return out;
}

UniversalAlgebra::UniversalAlgebra(LieAlgebraPtr h, LieAlgebraPtr g, OrderPtr order,
                                   std::vector<LabeledPolynomial> jgens, GroebnerBasis gb)
    : h_(std::move(h)),
      g_(std::move(g)),
      order_(std::move(order)),
      jgens_(std::move(jgens)),
      gb_(std::move(gb)),
      names_(universal_variable_names(h_->dim(), g_->dim())) {}

std::vector<Polynomial> UniversalAlgebra::generator_polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& lp : jgens_) out.push_back(lp.poly);
  return out;
}

UniversalAlgebraPtr build_universal_algebra(LieAlgebraPtr h, LieAlgebraPtr g, OrderKind kind,
                                            const GroebnerOptions& options) {
  const OrderPtr order = make_order(kind, h->dim() * g->dim());
  auto jgens = universal_polynomials(*h, *g, order);
  std::vector<Polynomial> polys;
  for (const auto& lp : jgens) polys.push_back(lp.poly);
  GroebnerBasis gb = buchberger(std::move(polys), order, options);
  auto A = std::make_shared<UniversalAlgebra>(std::move(h), std::move(g), order, std::move(jgens), std::move(gb));
  const Report check = verify_universal_relations(*A);
  if (!check.passed()) throw StructuralError("build_universal_algebra: defining relations fail in normal form");
  return A;
}

AlgebraElement reduce(const UniversalAlgebraPtr& A, const Polynomial& p) {
  if (!same_order(p.order(), A->order()) && !p.is_zero())
    throw MismatchError("reduce: polynomial is not in the variables of this algebra");
  return {A, normal_form(p.order() ? p : Polynomial(A->order()), A->gb())};
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return reduce(a.owner, a.value * b.value);
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  return reduce(a.owner, a.value + b.value);
}

Report verify_universal_relations(const UniversalAlgebra& A) {
  Report report("relations of A(" + A.h()->name() + "," + A.g()->name() + ")");
  const auto& h = *A.h();
  const auto& g = *A.g();
  for (std::size_t a = 0; a < A.n(); ++a)
    for (std::size_t i = 0; i < A.d(); ++i)
      for (std::size_t j = 0; j < A.d(); ++j) {
        Polynomial lhs(A.order()), rhs(A.order());
        for (std::size_t s = 0; s < A.n(); ++s)
          for (std::size_t t = 0; t < A.n(); ++t)
            if (!h.constant(s, t, a).is_zero()) lhs += A.x(s, i) * A.x(t, j) * h.constant(s, t, a);
        for (std::size_t u = 0; u < A.d(); ++u)
          if (!g.constant(i, j, u).is_zero()) rhs += A.x(a, u) * g.constant(i, j, u);
        const Polynomial diff = normal_form(lhs - rhs, A.gb());
        report.record("relation", {a + 1, i + 1, j + 1}, diff.to_string(A.variable_names()));
      }
  const bool same = ideal_equal(A.generator_polynomials(), A.gb().generators(), A.order());
  report.record("basis-generates-ideal", {}, same ? "0" : "ideal mismatch");
  return report;
}

std::vector<Monomial> monomial_basis_up_to_degree(const UniversalAlgebra& A, std::uint32_t dmax) {
  std::vector<Monomial> out;
  const auto nv = static_cast<std::uint32_t>(A.nvars());
  const auto& gens = A.gb().generators();
  std::vector<Monomial::Entry> entries;
  // Enumerate exponent vectors with nondecreasing variable index.
  std::function<void(std::uint32_t, std::uint32_t)> walk = [&](std::uint32_t from, std::uint32_t left) {
    Monomial m(entries);
    if (std::none_of(gens.begin(), gens.end(), [&](const Polynomial& q) { return q.leading_monomial().divides(m); }))
      out.push_back(m);
    else
      return;  // every multiple of a non-standard monomial is non-standard
    if (left == 0) return;
    for (std::uint32_t v = from; v < nv; ++v) {
      entries.emplace_back(v, 1);
      walk(v, left - 1);
      entries.pop_back();
    }
  };
  walk(0, dmax);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return A.order()->less(a, b); });
  return out;
}

std::vector<Polynomial> sl2_golden_polynomials(const OrderPtr& order) {
  auto X = [&](std::size_t s, std::size_t i) {
    return Polynomial::variable(order, static_cast<std::uint32_t>((s - 1) * 3 + (i - 1)));
  };
  return {
      X(1, 3) - 2 * (X(1, 2) * X(3, 1)) + 2 * (X(1, 1) * X(3, 2)),
      X(1, 1) - X(1, 1) * X(3, 3) + X(1, 3) * X(3, 1),
      X(1, 2) - X(1, 3) * X(3, 2) + X(1, 2) * X(3, 3),
      X(2, 3) - 2 * (X(2, 1) * X(3, 2)) + 2 * (X(2, 2) * X(3, 1)),
      X(2, 1) - X(2, 3) * X(3, 1) + X(2, 1) * X(3, 3),
      X(2, 2) - X(2, 2) * X(3, 3) + X(2, 3) * X(3, 2),
      X(3, 3) - X(1, 1) * X(2, 2) + X(1, 2) * X(2, 1),
      2 * X(3, 1) - X(2, 1) * X(1, 3) + X(1, 1) * X(2, 3),
      2 * X(3, 2) - X(1, 2) * X(2, 3) + X(1, 3) * X(2, 2),
  };
}

BialgebraStructure::BialgebraStructure(UniversalAlgebraPtr owner)
    : owner_(std::move(owner)), tensor_gb_(nullptr) {
  if (!owner_->is_bialgebra()) throw MismatchError("bialgebra_structure: requires h = g");
  const std::size_t n = owner_->n();
  const std::size_t n2 = n * n;
  tensor_order_ = make_order(OrderKind::degrevlex, 2 * n2);
  auto left = [&](std::size_t i, std::size_t j) {
    return Polynomial::variable(tensor_order_, static_cast<std::uint32_t>(i * n + j));
  };
  auto right = [&](std::size_t i, std::size_t j) {
    return Polynomial::variable(tensor_order_, static_cast<std::uint32_t>(n2 + i * n + j));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial img(tensor_order_);
      for (std::size_t s = 0; s < n; ++s) img += left(i, s) * right(s, j);
      delta_images_.push_back(std::move(img));
    }

  // J' + J'': the generators of J written in each tensor factor.
  std::vector<Polynomial> left_vars, right_vars;
  for (std::size_t k = 0; k < n2; ++k) {
    left_vars.push_back(Polynomial::variable(tensor_order_, static_cast<std::uint32_t>(k)));
    right_vars.push_back(Polynomial::variable(tensor_order_, static_cast<std::uint32_t>(n2 + k)));
  }
  std::vector<Polynomial> tensor_gens;
  for (const auto& lp : owner_->jgens()) {
    tensor_gens.push_back(substitute(lp.poly, left_vars, tensor_order_));
    tensor_gens.push_back(substitute(lp.poly, right_vars, tensor_order_));
  }
  tensor_gb_ = buchberger(std::move(tensor_gens), tensor_order_);

  const auto& A = *owner_;
  const auto names = tensor_names();
  report_ = Report("bialgebra " + A.h()->name());
  for (const auto& lp : A.jgens()) {
    report_.record("counit-kills-relation", {lp.a, lp.i, lp.j}, epsilon(lp.poly).to_string());
    report_.record("delta-preserves-ideal", {lp.a, lp.i, lp.j},
                   normal_form(delta(lp.poly), tensor_gb_).to_string(names));
  }

  // Three-fold tensor ring for coassociativity.
  const OrderPtr triple = make_order(OrderKind::degrevlex, 3 * n2);
  auto y = [&](std::size_t factor, std::size_t i, std::size_t j) {
    return Polynomial::variable(triple, static_cast<std::uint32_t>(factor * n2 + i * n + j));
  };
  std::vector<Polynomial> delta_left(2 * n2), delta_right(2 * n2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Polynomial l(triple), r(triple);
      for (std::size_t t = 0; t < n; ++t) {
        l += y(0, a, t) * y(1, t, b);
        r += y(1, a, t) * y(2, t, b);
      }
      delta_left[a * n + b] = l;
      delta_left[n2 + a * n + b] = y(2, a, b);
      delta_right[a * n + b] = y(0, a, b);
      delta_right[n2 + a * n + b] = r;
    }
  // Counit laws map k[X', X''] back to k[X].
  std::vector<Polynomial> eps_left(2 * n2), eps_right(2 * n2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Polynomial delta_ab = A.constant(a == b ? 1 : 0);
      eps_left[a * n + b] = delta_ab;
      eps_left[n2 + a * n + b] = A.x(a, b);
      eps_right[a * n + b] = A.x(a, b);
      eps_right[n2 + a * n + b] = delta_ab;
    }
  std::vector<std::string> triple_names;
  for (int f = 1; f <= 3; ++f)
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = 1; b <= n; ++b) triple_names.push_back(std::string(f, '\'') + "x" + label(a, b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial& dij = delta_images_[i * n + j];
      const Polynomial coassoc = substitute(dij, delta_left, triple) - substitute(dij, delta_right, triple);
      report_.record("coassociativity", {i + 1, j + 1}, coassoc.to_string(triple_names));
      const Polynomial xij = A.x(i, j);
      report_.record("left-counit", {i + 1, j + 1},
                     (substitute(dij, eps_left, A.order()) - xij).to_string(A.variable_names()));
      report_.record("right-counit", {i + 1, j + 1},
                     (substitute(dij, eps_right, A.order()) - xij).to_string(A.variable_names()));
    }
}

std::vector<std::string> BialgebraStructure::tensor_names() const {
  const std::size_t n = owner_->n();
  std::vector<std::string> names;
  for (const char* prefix : {"x'", "x''"})
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = 1; b <= n; ++b) names.push_back(prefix + label(a, b));
  return names;
}

Polynomial BialgebraStructure::delta(const Polynomial& p) const {
  return substitute(p, delta_images_, tensor_order_);
}

Rational BialgebraStructure::epsilon(const Polynomial& p) const {
  Rational total;
  for (const auto& term : p.terms()) {
    bool diagonal = true;
    for (const auto& [v, e] : term.monomial.entries()) {
      (void)e;
      if (v / owner_->n() != v % owner_->n()) diagonal = false;
    }
    if (diagonal) total += term.coeff;
  }
  return total;
}

BialgebraStructure bialgebra_structure(const UniversalAlgebraPtr& A) {
  BialgebraStructure B(A);
  if (!B.report().passed()) throw StructuralError("bialgebra_structure: a bialgebra law failed");
  return B;
}

}  // namespace univalg
