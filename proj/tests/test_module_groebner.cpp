#include "doctest.h"
#include "support/random_poly.hpp"
#include "univalg/module_groebner.hpp"

using namespace univalg;

TEST_CASE("no generators over the zero ideal: the free module") {
  const auto o = make_order(OrderKind::degrevlex, 2);
  const auto mgb = module_buchberger({}, buchberger({}, o), 2);
  CHECK(mgb.generators().empty());
  testing::Rng rng(1);
  ModuleVector v = ModuleVector::single(0, testing::random_polynomial(rng, o, 3, 2));
  v.set_component(1, testing::random_polynomial(rng, o, 3, 2));
  CHECK(module_normal_form(v, mgb) == v);
}

TEST_CASE("killing e_1 leaves normal forms supported on position 2") {
  testing::Rng rng(2);
  const auto o = make_order(OrderKind::degrevlex, 2);
  const auto mgb = module_buchberger({ModuleVector::unit(0, o)}, buchberger({}, o), 2);
  for (int trial = 0; trial < 10; ++trial) {
    ModuleVector v = ModuleVector::single(0, testing::random_polynomial(rng, o, 3, 2));
    const auto c1 = testing::random_polynomial(rng, o, 3, 2);
    v.set_component(1, c1);
    const auto nf = module_normal_form(v, mgb);
    CHECK(nf.component(0, o).is_zero());
    CHECK(nf.component(1, o) == c1);
  }
}

TEST_CASE("module normal form over a quotient ring") {
  testing::Rng rng(3);
  const auto o = make_order(OrderKind::degrevlex, 2);
  const Monomial x{{0, 1}}, y{{1, 1}};
  // Ring k[x,y]/(x^2 - y); submodule generated by x e1 - e2 and y e2.
  const auto ring = buchberger({Polynomial(o, {{x * x, 1}, {y, -1}})}, o);
  ModuleVector g1 = ModuleVector::single(0, Polynomial::variable(o, 0));
  g1.set_component(1, Polynomial::constant(o, -1));
  const ModuleVector g2 = ModuleVector::single(1, Polynomial::variable(o, 1));
  const auto mgb = module_buchberger({g1, g2}, ring, 2);
  CHECK(verify_module_groebner(mgb));
  // x^2 e1 = x e2 = y e1 ... e.g. y*e1 reduces to zero: y e1 = x^2 e1 ~ x e2 ~ ... check via generators.
  CHECK(module_normal_form(g1, mgb).is_zero());
  CHECK(module_normal_form(ModuleVector::single(1, Polynomial(o, {{x * x, 1}})), mgb).is_zero());

  for (int trial = 0; trial < 20; ++trial) {
    ModuleVector v = ModuleVector::single(0, testing::random_polynomial(rng, o, 3, 3));
    v.set_component(1, testing::random_polynomial(rng, o, 3, 3));
    const auto a = testing::random_polynomial(rng, o, 3, 2);
    const auto nv = module_normal_form(v, mgb);
    CHECK(module_normal_form(nv, mgb) == nv);
    // NF(a v) = NF(NF_ring(a) NF(v))
    CHECK(module_normal_form(a * v, mgb) == module_normal_form(normal_form(a, ring) * nv, mgb));
    ModuleVector w = ModuleVector::single(1, testing::random_polynomial(rng, o, 2, 2));
    CHECK(module_normal_form(v + w, mgb) == nv + module_normal_form(w, mgb));
  }
}

TEST_CASE("module basis is independent of generator order and reduced") {
  testing::Rng rng(8);
  const auto o = make_order(OrderKind::degrevlex, 2);
  const auto ring = buchberger({testing::random_polynomial(rng, o, 2, 2)}, o);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<ModuleVector> gens;
    for (int k = 0; k < 3; ++k) {
      ModuleVector v = ModuleVector::single(0, testing::random_polynomial(rng, o, 2, 1));
      v.set_component(1, testing::random_polynomial(rng, o, 2, 1));
      v.set_component(2, testing::random_polynomial(rng, o, 2, 1));
      gens.push_back(v);
    }
    const auto ref = module_buchberger(gens, ring, 3);
    CHECK(verify_module_groebner(ref));
    std::reverse(gens.begin(), gens.end());
    CHECK(module_buchberger(gens, ring, 3) == ref);
    for (const auto& g : ref.generators()) CHECK(module_normal_form(g, ref).is_zero() == true);
  }
}

TEST_CASE("module rendering") {
  const auto o = make_order(OrderKind::degrevlex, 1);
  ModuleVector v = ModuleVector::single(0, Polynomial(o, {{Monomial{{0, 1}}, 2}, {Monomial{}, -1}}));
  v.set_component(1, Polynomial::constant(o, Rational(1, 2)));
  CHECK(v.to_string({"x"}, {"Y1", "Y2"}) == "2*x*Y1 - Y1 + 1/2*Y2");
}
