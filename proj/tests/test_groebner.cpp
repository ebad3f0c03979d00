#include <algorithm>

#include "doctest.h"
#include "support/random_poly.hpp"
#include "univalg/errors.hpp"
#include "univalg/groebner.hpp"

using namespace univalg;

namespace {

Polynomial poly(const OrderPtr& o, std::vector<Term> t) { return Polynomial(o, std::move(t)); }

}  // namespace

TEST_CASE("x^2-1 and x^3-x generate the principal ideal (x^2-1)") {
  const auto lex = make_order(OrderKind::lex, 1);
  const Monomial x{{0, 1}};
  const auto f = poly(lex, {{x * x, 1}, {Monomial{}, -1}});
  const auto g = poly(lex, {{x * x * x, 1}, {x, -1}});
  const auto gb = buchberger({f, g}, lex);
  REQUIRE(gb.size() == 1);
  CHECK(gb.generators()[0] == f);
}

TEST_CASE("empty and zero generating sets give the zero ideal") {
  const auto o = make_order(OrderKind::degrevlex, 2);
  CHECK(buchberger({}, o).empty());
  CHECK(buchberger({Polynomial(o), Polynomial(o)}, o).empty());
  testing::Rng rng(1);
  const auto p = testing::random_polynomial(rng, o, 3, 2);
  CHECK(normal_form(p, buchberger({}, o)) == p);
}

TEST_CASE("textbook degrevlex example x^3-2xy, x^2y-2y^2+x") {
  const auto o = make_order(OrderKind::degrevlex, 2);
  const Monomial x{{0, 1}}, y{{1, 1}};
  const auto f1 = poly(o, {{x * x * x, 1}, {x * y, -2}});
  const auto f2 = poly(o, {{x * x * y, 1}, {y * y, -2}, {x, 1}});
  const auto gb = buchberger({f1, f2}, o);
  REQUIRE(gb.size() == 3);
  // Reduced basis {y^2 - x/2, x*y, x^2}, sorted by increasing leading monomial.
  CHECK(gb.generators()[0] == poly(o, {{y * y, 1}, {x, Rational(-1, 2)}}));
  CHECK(gb.generators()[1] == poly(o, {{x * y, 1}}));
  CHECK(gb.generators()[2] == poly(o, {{x * x, 1}}));
  CHECK(verify_groebner(gb));
  CHECK(is_reduced(gb));
}

TEST_CASE("textbook lex elimination example") {
  const auto o = make_order(OrderKind::lex, 3);
  const Monomial x{{0, 1}}, y{{1, 1}}, z{{2, 1}};
  const auto f1 = poly(o, {{x * x, 1}, {y * y, 1}, {z * z, 1}, {Monomial{}, -1}});
  const auto f2 = poly(o, {{x * x, 1}, {z * z, 1}, {y, -1}});
  const auto f3 = poly(o, {{x, 1}, {z, -1}});
  const auto gb = buchberger({f1, f2, f3}, o);
  REQUIRE(gb.size() == 3);
  CHECK(gb.generators()[0] ==
        poly(o, {{z * z * z * z, 1}, {z * z, Rational(1, 2)}, {Monomial{}, Rational(-1, 4)}}));
  CHECK(gb.generators()[1] == poly(o, {{y, 1}, {z * z, -2}}));
  CHECK(gb.generators()[2] == poly(o, {{x, 1}, {z, -1}}));
}

TEST_CASE("unit ideal") {
  const auto o = make_order(OrderKind::degrevlex, 1);
  const Monomial x{{0, 1}};
  const auto gb = buchberger({poly(o, {{x, 1}}), poly(o, {{x, 1}, {Monomial{}, -1}})}, o);
  CHECK(gb.is_unit());
  CHECK(normal_form(Polynomial::constant(o, 5), gb).is_zero());
}

TEST_CASE("ideal_equal on small examples") {
  const auto o = make_order(OrderKind::degrevlex, 1);
  const Monomial x{{0, 1}};
  CHECK(ideal_equal({poly(o, {{x, 1}})}, {poly(o, {{x, 2}})}, o));
  CHECK_FALSE(ideal_equal({poly(o, {{x, 1}})}, {poly(o, {{x * x, 1}})}, o));
}

TEST_CASE("reduced basis is independent of generator order") {
  testing::Rng rng(21);
  const auto o = make_order(OrderKind::degrevlex, 3);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_polynomial(rng, o, 3, 2));
    const auto ref = buchberger(gens, o);
    CHECK(verify_groebner(ref));
    CHECK(is_reduced(ref));
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(buchberger(gens, o) == ref);
    std::reverse(gens.begin(), gens.end());
    gens.push_back(gens.front() * testing::random_polynomial(rng, o, 2, 1));
    CHECK(buchberger(gens, o) == ref);
  }
}

TEST_CASE("normal form is linear, idempotent and multiplicative modulo the ideal") {
  testing::Rng rng(99);
  const auto o = make_order(OrderKind::degrevlex, 3);
  const Monomial x{{0, 1}}, y{{1, 1}}, z{{2, 1}};
  const auto gb = buchberger({poly(o, {{x * y, 1}, {z, -1}}), poly(o, {{y * y, 1}, {x, -1}}),
                              poly(o, {{x * z, 1}, {Monomial{}, -1}})},
                             o);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = testing::random_polynomial(rng, o, 4, 3);
    const auto q = testing::random_polynomial(rng, o, 4, 3);
    const auto np = normal_form(p, gb);
    const auto nq = normal_form(q, gb);
    CHECK(normal_form(np, gb) == np);
    CHECK(normal_form(p + q, gb) == np + nq);
    CHECK(normal_form(p * q, gb) == normal_form(np * nq, gb));
    CHECK(ideal_contains(gb, p - np));
    for (const auto& t : np.terms())
      for (const auto& g : gb.generators()) CHECK_FALSE(g.leading_monomial().divides(t.monomial));
  }
}

TEST_CASE("lex and degrevlex bases describe the same ideal") {
  testing::Rng rng(4);
  const auto drl = make_order(OrderKind::degrevlex, 2);
  const auto lex = make_order(OrderKind::lex, 2);
  std::vector<Polynomial> gens{testing::random_polynomial(rng, drl, 3, 2),
                               testing::random_polynomial(rng, drl, 3, 2)};
  const auto g1 = buchberger(gens, drl);
  const auto g2 = buchberger(gens, lex);
  for (const auto& g : g2.generators()) CHECK(ideal_contains(g1, g));
  for (const auto& g : g1.generators()) CHECK(ideal_contains(g2, g));
}

TEST_CASE("pair budget exhaustion is an explicit error") {
  const auto o = make_order(OrderKind::degrevlex, 2);
  const Monomial x{{0, 1}}, y{{1, 1}};
  const auto f1 = poly(o, {{x * x * x, 1}, {x * y, -2}});
  const auto f2 = poly(o, {{x * x * y, 1}, {y * y, -2}, {x, 1}});
  GroebnerOptions tight;
  tight.pair_budget = 1;
  CHECK_THROWS_AS(buchberger({f1, f2}, o, tight), ResourceLimitError);
  GroebnerOptions roomy;
  roomy.pair_budget = 1000;
  CHECK_NOTHROW(buchberger({f1, f2}, o, roomy));
}
