// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/coalgebra_oracles.hpp"
#include "support/factorization_instances.hpp"
#include "univalg/catalog.hpp"
#include "univalg/pbw.hpp"

using namespace univalg;
using namespace univalg::testing;
namespace cat = univalg::catalog;

namespace {

// Collects failed sub-checks of one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
  }
  bool ok() const { return first_failure_.empty(); }
  std::size_t count() const { return count_; }
  const std::string& failure() const { return first_failure_; }

 private:
  std::size_t count_ = 0;
  std::string first_failure_;
};

bool all_passed = true;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<std::string(Checks&)>& body) {
  Checks checks;
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  try {
    detail = body(checks);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) checks.expect(seconds <= limit_seconds, "time limit exceeded");
  const bool ok = checks.ok();
  all_passed = all_passed && ok;
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", seconds);
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << checks.count() << " checks, " << time
            << (detail.empty() ? "" : ", " + detail) << ")";
  if (!ok) std::cout << ": " << checks.failure();
  std::cout << std::endl;
}

std::size_t binomial_count(std::size_t vars, std::size_t degree) { return binomial(vars + degree, degree); }

// Both sides of the defining relation at (s, i, j), written from the constants:
// sum_p eta(j,i,p) Y[s,p] and sum_{t,r} omega(r,t,s) x_rj . Y[t,i].
ModuleVector relation_from_constants(const UniversalAModule& UM, std::size_t s, std::size_t i, std::size_t j) {
  const auto& A = *UM.algebra();
  const LieModule &U = UM.U(), &Z = UM.Z();
  ModuleVector lhs, rhs;
  for (std::size_t p = 0; p < Z.dim(); ++p)
    if (!Z.action(j)(p, i).is_zero()) lhs += ModuleVector::single(UM.position(s, p), A.constant(Z.action(j)(p, i)));
  for (std::size_t t = 0; t < U.dim(); ++t)
    for (std::size_t r = 0; r < A.n(); ++r)
      if (!U.action(r)(s, t).is_zero()) rhs += ModuleVector::single(UM.position(t, i), A.x(r, j) * U.action(r)(s, t));
  return lhs - rhs;
}

Word random_word(Rng& rng, std::size_t n, std::size_t max_len) {
  Word w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  for (auto& x : w) x = std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(n - 1))(rng);
  return w;
}

}  // namespace

int main() {
  const auto sl2 = cat::sl2();

  criterion(1, "sl2 golden ideal", 10.0, [&](Checks& c) {
    const auto A = build_universal_algebra(sl2, sl2);
    c.expect(A->jgens().size() == 27, "27 generators");
    c.expect(ideal_equal(A->generator_polynomials(), sl2_golden_polynomials(A->order()), A->order()),
             "ideal_equal with the nine listed polynomials");
    const auto lex = build_universal_algebra(sl2, sl2, OrderKind::lex);
    c.expect(ideal_equal(lex->generator_polynomials(), sl2_golden_polynomials(lex->order()), lex->order()),
             "ideal_equal under lex");
    return std::to_string(A->gb().generators().size()) + " basis elements";
  });

  criterion(2, "perfect g collapses A(k, sl2) to k", 0, [&](Checks& c) {
    const auto A = build_universal_algebra(cat::line(), sl2);
    for (std::size_t u = 0; u < 3; ++u) c.expect(reduce(A, A->x(0, u)).is_zero(), "x_1u reduces to 0");
    c.expect(reduce(A, A->constant(1)).value == A->constant(1), "1 is not 0");
    for (std::uint32_t d = 0; d <= 4; ++d) c.expect(monomial_basis_up_to_degree(*A, d).size() == 1, "dimension 1");
    return "";
  });

  criterion(3, "abelian h, g give free polynomial algebras", 0, [&](Checks& c) {
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto A = build_universal_algebra(cat::abelian(n), cat::abelian(d));
        for (const auto& lp : A->jgens()) c.expect(lp.poly.is_zero(), "P = 0");
        c.expect(A->gb().generators().empty(), "J = 0");
        c.expect(monomial_basis_up_to_degree(*A, 2).size() == binomial_count(n * d, 2), "degree <= 2 count");
      }
    return "";
  });

  criterion(4, "tensor module U (x) V is a Lie g-module", 60.0, [&](Checks& c) {
    Rng rng(1001);
    std::size_t instances = 0;
    for (; instances < 60; ++instances) {
      const auto hi = random_algebra(rng, 3), gi = random_algebra(rng, 3);
      const auto A = build_universal_algebra(hi.algebra, gi.algebra);
      const LieModule U = random_module(rng, hi, 3);
      const MatrixARep V = random_arep(rng, A, 3, &hi, &gi);
      c.expect(validate_lie_module(tensor_lie_module(U, V).result).empty(), "module axioms");
    }
    return std::to_string(instances) + " instances";
  });

  criterion(5, "U(U,Z) relation and rho-equivariance certificates", 0, [&](Checks& c) {
    const auto B = build_universal_algebra(sl2, sl2);
    const UniversalAModule ad = build_universal_amodule(B, cat::adjoint(sl2), cat::adjoint(sl2));
    c.expect(ad.relation_report().items().size() == 27 && ad.relation_report().passed(), "adjoint relations");
    c.expect(ad.equivariance_report().items().size() == 9 && ad.equivariance_report().passed(), "adjoint equivariance");
    Rng rng(2002);
    const int random = 24;
    for (int t = 0; t < random; ++t) {
      const auto inst = random_a_instance(rng);
      const UniversalAModule UM(inst.A, inst.U, inst.Z);
      c.expect(UM.relation_report().passed(), "random relations");
      c.expect(UM.equivariance_report().passed(), "random equivariance");
    }
    return "adjoint sl2 + " + std::to_string(random) + " random";
  });

  criterion(6, "factorization, uniqueness, Gamma and naturality", 0, [&](Checks& c) {
    Rng rng(3003);
    const int instances = 24;
    for (int t = 0; t < instances; ++t) {
      const auto inst = random_a_instance(rng);
      const UniversalAModule UM = build_universal_amodule(inst.A, inst.U, inst.Z);
      const FactorizationResult res = factorize_through_universal(UM, inst.X, inst.f);
      c.expect(res.unique(), "unique solution");
      c.expect(res.commutes, "diagram commutes");
      c.expect(res.witness.passed(), "relation witnesses");
      c.expect(gamma(UM, inst.X, res.map) == inst.f, "Gamma o factorize = id");
      const Matrix theta = random_well_defined(rng, UM, inst.X);
      const LinearMap g = gamma(UM, inst.X, theta);
      c.expect(factorize_through_universal(UM, inst.X, g).map == theta, "factorize o Gamma = id");
      const MatrixARep X2 = random_arep(rng, inst.A, 3, &inst.hi, &inst.gi);
      const LinearMap k = random_arep_morphism(rng, inst.X, X2);
      c.expect(gamma(UM, X2, k.matrix() * theta) == tensor_on_morphism(inst.U, inst.X, X2, k).after(g),
               "naturality in X");
      const LieModule Zs = direct_sum(random_module(rng, inst.gi, 2), inst.Z).sum;
      const LinearMap hmap = random_lie_morphism(rng, Zs, inst.Z);
      const UniversalAModule UM2 = build_universal_amodule(inst.A, inst.U, Zs);
      const PresentedMap hbar = functor_on_morphism_U(UM2, UM, hmap);
      c.expect(hbar.certificate.passed(), "functor certificate");
      c.expect(gamma(UM2, inst.X, theta * hbar.matrix) == g.after(hmap), "naturality in Z");
    }
    return std::to_string(instances) + " instances";
  });

  criterion(7, "coalgebra structure on U(adjoint sl2)", 0, [&](Checks& c) {
    const auto B = build_universal_algebra(sl2, sl2);
    const BialgebraStructure bi = bialgebra_structure(B);
    const UniversalAModule UM = build_universal_amodule(B, cat::adjoint(sl2), cat::adjoint(sl2));
    c.expect(bmodule_on_tensor_square(UM, bi).passed(), "B acts on the tensor square");
    const CoalgebraOnU C = build_coalgebra(UM, bi);
    c.expect(C.report().passed(), "coassociativity, counit, well-definedness");
    c.expect(verify_comodule(C).passed(), "comodule axioms");
    const Report bm = verify_bmodule_coalgebra(C);
    c.expect(bm.items().size() == 162 && bm.passed(), "B-module coalgebra identities");
    const FactorizationResult eps = factorize_through_universal(UM, counit_rep(B), LinearMap::identity(3));
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t t = 0; t < 3; ++t)
        c.expect(eps.map(0, UM.position(l, t)) == Rational(l == t ? 1 : 0), "eps(y_lt) = delta_lt");
    c.expect(eps.unique() && eps.commutes, "eps factorization unique");
    return "";
  });

  criterion(8, "U(U, W1 (+) W2) = U(U,W1) (+) U(U,W2)", 0, [&](Checks& c) {
    const auto B = build_universal_algebra(sl2, sl2);
    const LieModule ad = cat::adjoint(sl2);
    const DirectSumCertificate cert = direct_sum_check(B, ad, ad, cat::trivial(sl2, 1));
    c.expect(cert.passed(), "certificate");
    const std::size_t r = cert.forward.rows();
    c.expect(cert.backward * cert.forward == Matrix::identity(cert.forward.cols()), "backward o forward = id");
    c.expect(cert.forward * cert.backward == Matrix::identity(r), "forward o backward = id");
    c.expect(r == 12, "rank 9 + 3");
    return "";
  });

  criterion(9, "V(V,W) presentations and factorize_lie", 0, [&](Checks& c) {
    const auto B = build_universal_algebra(sl2, sl2);
    const UniversalLieHModule fixture = build_universal_lie_hmodule(counit_rep(B), cat::adjoint(sl2));
    c.expect(fixture.rank() == 3 && fixture.relgens().size() == 9, "fixture presentation");
    const FactorizationResult id = factorize_lie(fixture, cat::adjoint(sl2), LinearMap::identity(3));
    c.expect(id.unique() && id.commutes && id.witness.passed(), "fixture factorization");
    Rng rng(4004);
    const int instances = 15;
    for (int t = 0; t < instances; ++t) {
      const auto inst = random_lie_instance(rng);
      const UniversalLieHModule VM = build_universal_lie_hmodule(inst.V, inst.W);
      const FactorizationResult res = factorize_lie(VM, inst.Y, inst.f);
      c.expect(res.unique(), "unique");
      c.expect(res.commutes, "commutes");
      c.expect(res.witness.passed(), "zero relation witnesses");
      c.expect(gamma_lie(VM, inst.Y, res.map) == inst.f, "Gamma o factorize = id");
      const Matrix theta = random_well_defined(rng, VM, inst.Y);
      c.expect(factorize_lie(VM, inst.Y, gamma_lie(VM, inst.Y, theta)).map == theta, "factorize o Gamma = id");
    }
    return std::to_string(instances) + " random targets";
  });

  criterion(10, "independent oracles agree with the main code paths", 0, [&](Checks& c) {
    // Row reduction: the linear forms of A(k, sl2) span all variables.
    {
      const auto A = build_universal_algebra(cat::line(), sl2);
      Matrix coeffs(9, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          for (std::size_t u = 0; u < 3; ++u) coeffs(i * 3 + j, u) = sl2->constant(i, j, u);
      const bool oracle_k = rank(coeffs) == 3;
      c.expect(oracle_k == (monomial_basis_up_to_degree(*A, 3).size() == 1), "A(k, sl2) = k");
    }
    // Degree <= 1 probe of A(sl2, sl2) by evaluation at points of the variety.
    {
      const auto A = build_universal_algebra(sl2, sl2);
      Rng rng(5);
      std::vector<std::vector<Rational>> points = {std::vector<Rational>(9)};
      while (points.size() < 14) points.push_back(adjoint_point(random_invertible(rng, 2)));
      Matrix eval(points.size(), 10);
      for (std::size_t p = 0; p < points.size(); ++p) {
        for (const auto& q : A->generator_polynomials()) c.expect(evaluate(q, points[p]).is_zero(), "point on variety");
        eval(p, 0) = 1;
        for (std::size_t v = 0; v < 9; ++v) eval(p, v + 1) = points[p][v];
      }
      c.expect(monomial_basis_up_to_degree(*A, 1).size() == rank(eval), "degree-1 count");
      // Counit: each P vanishes at the identity point x_ij = delta_ij.
      const BialgebraStructure bi = bialgebra_structure(A);
      std::vector<Rational> identity(9);
      for (std::size_t s = 0; s < 3; ++s) identity[s * 3 + s] = 1;
      for (const auto& lp : A->jgens()) {
        c.expect(evaluate(lp.poly, identity).is_zero(), "eps(P) = 0 by evaluation");
        c.expect(bi.epsilon(lp.poly) == evaluate(lp.poly, identity), "eps matches evaluation");
      }
    }
    // Abelian rank one: the relation is lambda*Y - X[1,1]*Y.
    {
      const auto L = cat::line();
      const auto A = build_universal_algebra(L, L);
      const Rational lambda(3, 2);
      const UniversalAModule UM(A, LieModule(L, {Matrix::identity(1)}, "k"), LieModule(L, {Matrix::identity(1) * lambda}, "k"));
      c.expect(UM.relgens().size() == 1 &&
                   UM.relgens()[0].vec == ModuleVector::single(0, A->constant(lambda) - A->x(0, 0)),
               "rank-one relation");
      Rng rng(6);
      // Equivariance forces x_11 to act by lambda on the target.
      const MatrixARep X = point_rep(A, {lambda});
      for (int t = 0; t < 5; ++t) {
        const Matrix f = Matrix::identity(1) * random_nonzero(rng);
        const auto oracle = dense_factorization(UM, X, f);
        c.expect(oracle && factorize_through_universal(UM, X, LinearMap(f)).map == *oracle, "rank-one dense solve");
      }
    }
    // Adjoint sl2: the relations written from the constants, and their
    // normal forms.
    {
      const auto B = build_universal_algebra(sl2, sl2);
      const UniversalAModule UM(B, cat::adjoint(sl2), cat::adjoint(sl2));
      for (const auto& lr : UM.relgens()) {
        const ModuleVector direct = relation_from_constants(UM, lr.s - 1, lr.i - 1, lr.j - 1);
        c.expect(direct == lr.vec, "relation from constants");
        c.expect(UM.presentation().normal_form(direct).is_zero(), "relation normal form");
      }
    }
    // Tensor action entrywise, and both factorizations against dense solves.
    Rng rng(7007);
    for (int t = 0; t < 20; ++t) {
      const auto hi = random_algebra(rng, 3), gi = random_algebra(rng, 3);
      const auto A = build_universal_algebra(hi.algebra, gi.algebra);
      const LieModule U = random_module(rng, hi, 3);
      const MatrixARep V = random_arep(rng, A, 3, &hi, &gi);
      const LieModule T = tensor_lie_module(U, V).result;
      for (std::size_t i = 0; i < gi.dim; ++i) c.expect(T.action(i) == tensor_action_oracle(U, V, i), "tensor entries");
    }
    for (int t = 0; t < 12; ++t) {
      const auto inst = random_a_instance(rng);
      const UniversalAModule UM(inst.A, inst.U, inst.Z);
      const auto oracle = dense_factorization(UM, inst.X, inst.f.matrix());
      c.expect(oracle && factorize_through_universal(UM, inst.X, inst.f).map == *oracle, "U factorization dense solve");
    }
    for (int t = 0; t < 12; ++t) {
      const auto inst = random_lie_instance(rng);
      const UniversalLieHModule VM = build_universal_lie_hmodule(inst.V, inst.W);
      const auto oracle = dense_factorization(VM, inst.Y, inst.f.matrix());
      c.expect(oracle && factorize_lie(VM, inst.Y, inst.f).map == *oracle, "V factorization dense solve");
    }
    // Functor on a composable pair.
    {
      const auto B = build_universal_algebra(sl2, sl2);
      const LieModule ad = cat::adjoint(sl2), V2 = cat::sl2_irrep(2);
      const LieModule S = direct_sum(ad, cat::trivial(sl2, 1)).sum;
      const UniversalAModule Uad(B, ad, ad), Uv(B, ad, V2), Us(B, ad, S);
      for (int t = 0; t < 3; ++t) {
        const LinearMap f1 = random_lie_morphism(rng, S, ad), f2 = random_lie_morphism(rng, ad, V2);
        c.expect(functor_on_morphism_U(Us, Uv, f2.after(f1)).matrix ==
                     functor_on_morphism_U(Uad, Uv, f2).matrix * functor_on_morphism_U(Us, Uad, f1).matrix,
                 "functor composition");
      }
    }
    // Delta descends: (theta1 (x) theta2) Delta kills the relations.
    for (int t = 0; t < 6; ++t) {
      const auto hi = random_algebra(rng, 2);
      const LieModule U = random_module(rng, hi, 2);
      const auto B = build_universal_algebra(U.algebra(), U.algebra());
      const UniversalAModule UM(B, U, U);
      const MatrixARep X1 = random_arep(rng, B, 2, &hi, &hi), X2 = random_arep(rng, B, 2, &hi, &hi);
      const MatrixARep X12 = tensor_arep(B, X1, X2);
      const Matrix G = delta_images(UM, random_well_defined(rng, UM, X1), random_well_defined(rng, UM, X2));
      c.expect(check_well_defined(UM, X12, G).passed(), "Delta through finite targets");
    }
    // Universal coalgebra map into a matrix coalgebra.
    for (std::size_t m = 1; m <= 2; ++m) {
      const auto L = cat::line();
      const Matrix N = random_invertible(rng, m);
      const auto B = build_universal_algebra(L, L);
      const BialgebraStructure bi = bialgebra_structure(B);
      const UniversalAModule UM(B, LieModule(L, {N}, "U"), LieModule(L, {N}, "U"));
      const CoalgebraOnU C(UM, bi);
      const FiniteCoalgebra X = matrix_coalgebra(B, N);
      Matrix psi(m * m * m, m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t q = 0; q < m; ++q) psi(q * m * m + (q * m + r), r) = 1;
      const CoalgebraMapResult res = universal_coalgebra_map(C, X, LinearMap(psi));
      const auto oracle = dense_factorization(UM, X.module, psi);
      c.expect(res.report.passed() && oracle && res.theta == *oracle, "coalgebra map dense solve");
    }
    // PBW rewriting does not depend on the reduction order.
    for (const auto& h : {sl2, cat::heisenberg(), cat::aff2()})
      for (int t = 0; t < 20; ++t) {
        PBWElement x;
        for (int k = 0; k < 3; ++k) x.add_term(random_word(rng, h->dim(), 5), random_rational(rng));
        c.expect(normalize(*h, x, RewriteStrategy::leftmost) == normalize(*h, x, RewriteStrategy::rightmost),
                 "PBW confluence");
      }
    return "";
  });

  return all_passed ? 0 : 1;
}
