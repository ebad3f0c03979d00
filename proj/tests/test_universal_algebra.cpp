#include <algorithm>

#include "doctest.h"
#include "support/oracles.hpp"
#include "univalg/catalog.hpp"
#include "univalg/errors.hpp"
#include "univalg/universal_algebra.hpp"

using namespace univalg;
namespace cat = univalg::catalog;

using namespace univalg::testing;

TEST_CASE("universal polynomials are labelled and include zeros") {
  const auto h = cat::sl2();
  const auto order = make_order(OrderKind::degrevlex, 9);
  const auto P = universal_polynomials(*h, *h, order);
  REQUIRE(P.size() == 27);
  CHECK(P.front().a == 1);
  CHECK(P.front().i == 1);
  CHECK(P.front().j == 1);
  CHECK(P.front().poly.is_zero());
  CHECK(P.back().a == 3);
  CHECK(P.back().j == 3);
  const auto names = universal_variable_names(3, 3);
  // P_(3,1,2) = X[3,3] - X[1,1]X[2,2] + X[1,2]X[2,1]
  const auto& p312 = *std::find_if(P.begin(), P.end(), [](const auto& lp) { return lp.a == 3 && lp.i == 1 && lp.j == 2; });
  CHECK(p312.poly.to_string(names) == "X[1,2]*X[2,1] - X[1,1]*X[2,2] + X[3,3]");
}

TEST_CASE("every listed sl2 polynomial is a multiple of a generated one") {
  const auto h = cat::sl2();
  const auto order = make_order(OrderKind::degrevlex, 9);
  const auto P = universal_polynomials(*h, *h, order);
  for (const auto& q : sl2_golden_polynomials(order)) {
    const bool found = std::any_of(P.begin(), P.end(), [&](const LabeledPolynomial& lp) {
      return !lp.poly.is_zero() && lp.poly.monic() == q.monic();
    });
    CHECK(found);
  }
}

TEST_CASE("sl2 ideal equals the nine-polynomial presentation") {
  for (OrderKind kind : {OrderKind::degrevlex, OrderKind::lex}) {
    const auto A = build_universal_algebra(cat::sl2(), cat::sl2(), kind);
    CHECK(ideal_equal(A->generator_polynomials(), sl2_golden_polynomials(A->order()), A->order()));
    CHECK(verify_groebner(A->gb()));
    CHECK(is_reduced(A->gb()));
    CHECK(verify_universal_relations(*A).passed());
  }
}

TEST_CASE("abelian algebras give free polynomial rings") {
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t d = 1; d <= 2; ++d) {
      const auto A = build_universal_algebra(cat::abelian(n), cat::abelian(d));
      CHECK(A->gb().empty());
      for (const auto& lp : A->jgens()) CHECK(lp.poly.is_zero());
      for (std::uint32_t dmax = 0; dmax <= 3; ++dmax)
        CHECK(monomial_basis_up_to_degree(*A, dmax).size() == binomial(n * d + dmax, dmax));
    }
  const auto A = build_universal_algebra(cat::abelian(1), cat::abelian(2));
  CHECK(monomial_basis_up_to_degree(*A, 2).size() == 6);
}

TEST_CASE("line with a perfect algebra collapses to the ground field") {
  const auto A = build_universal_algebra(cat::line(), cat::sl2());
  // Oracle: the linear forms sum_u beta(i,j,u) X[1,u] span all three variables.
  Matrix coeffs(9, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t u = 0; u < 3; ++u) coeffs(i * 3 + j, u) = A->g()->constant(i, j, u);
  REQUIRE(rank(coeffs) == 3);
  for (std::size_t u = 0; u < 3; ++u) CHECK(reduce(A, A->x(0, u)).is_zero());
  CHECK(reduce(A, A->constant(1)).value == A->constant(1));
  for (std::uint32_t dmax = 0; dmax <= 3; ++dmax) {
    const auto basis = monomial_basis_up_to_degree(*A, dmax);
    REQUIRE(basis.size() == 1);
    CHECK(basis.front().is_one());
  }
}

TEST_CASE("line with aff2 is a polynomial ring in one variable") {
  // g/g' is spanned by the image of e1, so A = k[X[1,1]].
  const auto A = build_universal_algebra(cat::line(), cat::aff2());
  CHECK(reduce(A, A->x(0, 1)).is_zero());
  CHECK(monomial_basis_up_to_degree(*A, 3).size() == 4);
}

TEST_CASE("degree one probe of A(sl2, sl2)") {
  const auto A = build_universal_algebra(cat::sl2(), cat::sl2());
  // Oracle: evaluate 1 and the nine X[s,i] at rational points of the variety
  // (the zero map and automorphisms Ad(g)); full rank 10 means no nonzero
  // polynomial of degree <= 1 lies in J.
  testing::Rng rng(5);
  std::vector<std::vector<Rational>> points = {std::vector<Rational>(9)};
  while (points.size() < 14) points.push_back(adjoint_point(testing::random_invertible(rng, 2)));
  Matrix eval(points.size(), 10);
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (const auto& q : A->generator_polynomials()) REQUIRE(evaluate(q, points[p]).is_zero());
    eval(p, 0) = 1;
    for (std::size_t v = 0; v < 9; ++v) eval(p, v + 1) = points[p][v];
  }
  const std::size_t oracle = rank(eval);
  CHECK(oracle == 10);
  CHECK(monomial_basis_up_to_degree(*A, 1).size() == oracle);
}

TEST_CASE("reduce is a ring homomorphism onto normal forms") {
  const auto A = build_universal_algebra(cat::sl2(), cat::sl2());
  testing::Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial p = testing::random_polynomial(rng, A->order(), 4, 3);
    const Polynomial q = testing::random_polynomial(rng, A->order(), 4, 3);
    const AlgebraElement rp = reduce(A, p), rq = reduce(A, q);
    CHECK(reduce(A, p * q) == rp * rq);
    CHECK(reduce(A, p + q) == rp + rq);
    CHECK(reduce(A, rp.value) == rp);
  }
  for (const auto& lp : A->jgens()) CHECK(reduce(A, lp.poly).is_zero());
  const auto other = make_order(OrderKind::degrevlex, 9);
  CHECK_THROWS_AS(reduce(A, Polynomial::variable(make_order(OrderKind::lex, 9), 0)), MismatchError);
  (void)other;
}

TEST_CASE("permuting the basis of g renames the algebra") {
  testing::Rng rng(21);
  const auto h = cat::sl2();
  const auto g = cat::sl2();
  const auto A = build_universal_algebra(h, g);
  std::vector<std::size_t> perm = {0, 1, 2};
  for (int trial = 0; trial < 4; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix P(3, 3);
    for (std::size_t i = 0; i < 3; ++i) P(perm[i], i) = 1;  // f'_i = f_perm(i)
    const auto g2 = cat::change_of_basis(*g, P);
    // X'[s,i] corresponds to X[s,perm(i)]; rank variables so renaming is order preserving.
    std::vector<std::uint32_t> ranking(9);
    std::vector<Polynomial> rename(9);
    std::vector<std::uint32_t> image(9);
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t i = 0; i < 3; ++i) image[s * 3 + perm[i]] = static_cast<std::uint32_t>(s * 3 + i);
    for (std::uint32_t k = 0; k < 9; ++k) ranking[k] = image[k];
    const auto order2 = std::make_shared<MonomialOrder>(OrderKind::degrevlex, ranking);
    for (std::uint32_t k = 0; k < 9; ++k) rename[k] = Polynomial::variable(order2, image[k]);
    std::vector<Polynomial> gens2;
    for (const auto& lp : universal_polynomials(*h, *g2, order2)) gens2.push_back(lp.poly);
    const GroebnerBasis gb2 = buchberger(gens2, order2);
    REQUIRE(gb2.size() == A->gb().size());
    for (std::size_t k = 0; k < gb2.size(); ++k)
      CHECK(substitute(A->gb().generators()[k], rename, order2) == gb2.generators()[k]);
  }
}

TEST_CASE("bialgebra structure on B(h)") {
  for (const auto& h : {cat::sl2(), cat::abelian(2), cat::heisenberg(), cat::aff2(), cat::line()}) {
    const auto A = build_universal_algebra(h, h);
    const BialgebraStructure B = bialgebra_structure(A);
    CHECK(B.report().passed());
    CHECK(B.report().items().size() == 2 * A->jgens().size() + 3 * A->n() * A->n());
  }
  const auto A = build_universal_algebra(cat::sl2(), cat::sl2());
  const BialgebraStructure B = bialgebra_structure(A);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(B.epsilon(A->x(i, j)) == Rational(i == j ? 1 : 0));
  const auto names = B.tensor_names();
  CHECK(B.delta(A->x(0, 1)).to_string(names) == "x'[1,1]*x''[1,2] + x'[1,2]*x''[2,2] + x'[1,3]*x''[3,2]");
  const Polynomial golden = sl2_golden_polynomials(A->order())[6];  // X33 - X11X22 + X12X21
  CHECK(B.epsilon(golden).is_zero());
  CHECK_THROWS_AS(bialgebra_structure(build_universal_algebra(cat::line(), cat::sl2())), MismatchError);
}
