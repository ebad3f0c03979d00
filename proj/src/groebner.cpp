#include "univalg/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>

#include "univalg/errors.hpp"

namespace univalg {

std::size_t default_pair_budget() {
  if (const char* env = std::getenv("UNIVALG_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      // Malformed override: keep the built-in default.
    }
  }
  return kDefaultPairBudget;
}

bool GroebnerBasis::is_unit() const {
  return generators_.size() == 1 && generators_.front().is_constant() &&
         !generators_.front().is_zero();
}

Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  Polynomial work = p;
  Polynomial rem(p.order());
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    const Polynomial* reducer = nullptr;
    for (const auto& d : divisors) {
      if (!d.is_zero() && d.leading_monomial().divides(lt.monomial)) {
        reducer = &d;
        break;
      }
    }
    if (reducer == nullptr) {
      rem.push_smallest(work.pop_leading());
      continue;
    }
    const Monomial q = lt.monomial / reducer->leading_monomial();
    const Rational c = -(lt.coeff / reducer->leading_coeff());
    work.add_scaled(*reducer, q, c);
  }
  return rem;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!p.is_zero() && !same_order(p.order(), gb.order()))
    return reduce_full(p.with_order(gb.order()), gb.generators());
  return reduce_full(p, gb.generators());
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) { return normal_form(p, gb).is_zero(); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial s = f.mul_term(l / f.leading_monomial(), Rational(1) / f.leading_coeff());
  s.add_scaled(g, l / g.leading_monomial(), -(Rational(1) / g.leading_coeff()));
  return s;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Turns a Groebner basis into the reduced one; input need not be minimal.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, const MonomialOrder& order) {
  std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (auto& p : g) {
    bool redundant = false;
    for (const auto& q : minimal) {
      if (q.leading_monomial().divides(p.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    reduced.push_back(reduce_full(minimal[k], others).monic());
  }
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, OrderPtr order, const GroebnerOptions& options) {
  GroebnerBasis result(order);
  std::vector<Polynomial> basis;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_index;

  auto add_element = [&](Polynomial p) {
    const std::size_t k = basis.size();
    basis.push_back(std::move(p));
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, lcm(basis[i].leading_monomial(), basis[k].leading_monomial())});
      pending_index.emplace(i, k);
    }
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending_index.count({a, b}) > 0;
  };

  for (auto& g : gens) {
    Polynomial p = same_order(g.order(), order) ? std::move(g) : g.with_order(order);
    if (p.is_zero()) continue;
    p = reduce_full(p, basis);
    if (!p.is_zero()) add_element(p.monic());
  }

  std::size_t reduced_pairs = 0;
  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto best = pending.begin();
    for (auto it = pending.begin() + 1; it != pending.end(); ++it)
      if (order->less(it->lcm, best->lcm)) best = it;
    const Pair pair = *best;
    pending.erase(best);
    pending_index.erase({pair.i, pair.j});

    const auto& f = basis[pair.i];
    const auto& g = basis[pair.j];
    // First criterion: coprime leading monomials.
    if (f.leading_monomial().coprime(g.leading_monomial())) continue;
    // Second criterion: some third leading monomial divides the lcm and both
    // companion pairs have already been treated.
    bool chain = false;
    for (std::size_t l = 0; l < basis.size() && !chain; ++l) {
      if (l == pair.i || l == pair.j) continue;
      if (basis[l].leading_monomial().divides(pair.lcm) && !is_pending(pair.i, l) &&
          !is_pending(pair.j, l))
        chain = true;
    }
    if (chain) continue;

    if (++reduced_pairs > options.pair_budget)
      throw ResourceLimitError("Buchberger: S-pair budget of " +
                               std::to_string(options.pair_budget) + " exceeded");
    Polynomial r = reduce_full(s_polynomial(f, g), basis);
    if (!r.is_zero()) add_element(r.monic());
  }

  result.generators_ = reduce_basis(std::move(basis), *order);
  result.pairs_reduced_ = reduced_pairs;
  return result;
}

bool verify_groebner(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!reduce_full(s_polynomial(g[i], g[j]), g).is_zero()) return false;
  return true;
}

bool is_reduced(const GroebnerBasis& gb) {
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].is_zero() || !g[i].leading_coeff().is_one()) return false;
    if (i > 0 && !gb.order()->less(g[i - 1].leading_monomial(), g[i].leading_monomial())) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i].terms())
        if (g[j].leading_monomial().divides(t.monomial)) return false;
    }
  }
  return true;
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const OrderPtr& order, const GroebnerOptions& options) {
  const GroebnerBasis ga = buchberger(a, order, options);
  const GroebnerBasis gb = buchberger(b, order, options);
  for (const auto& p : b)
    if (!normal_form(p, ga).is_zero()) return false;
  for (const auto& p : a)
    if (!normal_form(p, gb).is_zero()) return false;
  return true;
}

}  // namespace univalg
