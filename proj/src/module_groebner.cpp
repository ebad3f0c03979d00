#include "univalg/module_groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "univalg/errors.hpp"

namespace univalg {

ModuleVector ModuleVector::unit(std::size_t position, const OrderPtr& order) {
  return single(position, Polynomial::constant(order, Rational(1)));
}

ModuleVector ModuleVector::single(std::size_t position, Polynomial p) {
  ModuleVector v;
  v.set_component(position, std::move(p));
  return v;
}

Polynomial ModuleVector::component(std::size_t position, const OrderPtr& order) const {
  auto it = components_.find(position);
  return it == components_.end() ? Polynomial(order) : it->second;
}

void ModuleVector::set_component(std::size_t position, Polynomial p) {
  if (p.is_zero())
    components_.erase(position);
  else
    components_[position] = std::move(p);
}

void ModuleVector::add_scaled(const ModuleVector& v, const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [pos, comp] : v.components_) {
    auto it = components_.find(pos);
    if (it == components_.end()) {
      components_.emplace(pos, comp.mul_term(m, c));
    } else {
      it->second.add_scaled(comp, m, c);
      if (it->second.is_zero()) components_.erase(it);
    }
  }
}

void ModuleVector::add_multiple(const ModuleVector& v, const Polynomial& p) {
  for (const auto& t : p.terms()) add_scaled(v, t.monomial, t.coeff);
}

Term ModuleVector::pop_leading() {
  auto it = components_.begin();
  Term t = it->second.pop_leading();
  if (it->second.is_zero()) components_.erase(it);
  return t;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  add_scaled(o, Monomial{}, Rational(1));
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  add_scaled(o, Monomial{}, Rational(-1));
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& s) {
  if (s.is_zero()) {
    components_.clear();
    return *this;
  }
  for (auto& [pos, comp] : components_) comp *= s;
  return *this;
}

ModuleVector operator*(const Polynomial& p, const ModuleVector& v) {
  ModuleVector out;
  out.add_multiple(v, p);
  return out;
}

ModuleVector ModuleVector::monic() const {
  if (is_zero()) return *this;
  ModuleVector out(*this);
  out *= Rational(1) / leading_term().coeff;
  return out;
}

std::string ModuleVector::to_string(const std::vector<std::string>& var_names,
                                    const std::vector<std::string>& gen_names) const {
  if (components_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [pos, comp] : components_) {
    const std::string gen = pos < gen_names.size() ? gen_names[pos] : "e" + std::to_string(pos + 1);
    for (const auto& t : comp.terms()) {
      const bool negative = t.coeff.sign() < 0;
      const Rational mag = negative ? -t.coeff : t.coeff;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      if (!mag.is_one()) out += mag.to_string() + "*";
      if (!t.monomial.is_one()) out += t.monomial.to_string(var_names) + "*";
      out += gen;
    }
  }
  return out;
}

std::strong_ordering compare_pot(std::size_t pos_a, const Monomial& a, std::size_t pos_b,
                                 const Monomial& b, const MonomialOrder& order) {
  if (pos_a != pos_b) return pos_b <=> pos_a;  // smaller position is larger
  return order.compare(a, b);
}

namespace {

const ModuleVector* find_reducer(const std::vector<const ModuleVector*>& candidates,
                                 const Monomial& m) {
  for (const auto* d : candidates)
    if (d->leading_term().monomial.divides(m)) return d;
  return nullptr;
}

struct Element {
  ModuleVector vec;
  bool ring = false;  // of the form j * e_p with j in the ring ideal basis
};

struct Pair {
  std::size_t i;
  std::size_t j;
  std::size_t pos;
  Monomial lcm;
};

std::vector<ModuleVector> reduce_module_basis(std::vector<ModuleVector> g, const MonomialOrder& order) {
  std::sort(g.begin(), g.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return compare_pot(a.leading_position(), a.leading_term().monomial, b.leading_position(),
                       b.leading_term().monomial, order) < 0;
  });
  std::vector<ModuleVector> minimal;
  for (auto& v : g) {
    bool redundant = false;
    for (const auto& w : minimal) {
      if (w.leading_position() == v.leading_position() &&
          w.leading_term().monomial.divides(v.leading_term().monomial)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(v));
  }
  std::vector<ModuleVector> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<ModuleVector> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    reduced.push_back(reduce_full(minimal[k], others).monic());
  }
  return reduced;
}

}  // namespace

ModuleVector reduce_full(const ModuleVector& v, const std::vector<ModuleVector>& divisors) {
  if (v.is_zero()) return v;
  std::map<std::size_t, std::vector<const ModuleVector*>> by_position;
  for (const auto& d : divisors)
    if (!d.is_zero()) by_position[d.leading_position()].push_back(&d);

  const OrderPtr& ord = v.components().begin()->second.order();
  struct Key {
    std::size_t pos;
    Monomial monomial;
  };
  auto descending = [&](const Key& a, const Key& b) {
    return compare_pot(a.pos, a.monomial, b.pos, b.monomial, *ord) > 0;
  };
  std::map<Key, Rational, decltype(descending)> work(descending);
  for (const auto& [pos, comp] : v.components())
    for (const auto& t : comp.terms()) work.emplace(Key{pos, t.monomial}, t.coeff);

  std::map<std::size_t, Polynomial> rem_components;
  while (!work.empty()) {
    auto lead = work.begin();
    const std::size_t pos = lead->first.pos;
    const ModuleVector* reducer = nullptr;
    if (auto it = by_position.find(pos); it != by_position.end())
      reducer = find_reducer(it->second, lead->first.monomial);
    if (reducer == nullptr) {
      auto [slot, inserted] = rem_components.try_emplace(pos, Polynomial(ord));
      slot->second.push_smallest({lead->first.monomial, lead->second});
      work.erase(lead);
      continue;
    }
    const Term& rlt = reducer->leading_term();
    const Monomial q = lead->first.monomial / rlt.monomial;
    const Rational c = -(lead->second / rlt.coeff);
    work.erase(lead);
    bool skip_leading = true;
    for (const auto& [rpos, comp] : reducer->components()) {
      for (const auto& t : comp.terms()) {
        if (skip_leading) {
          skip_leading = false;
          continue;
        }
        Key key{rpos, t.monomial * q};
        auto [it, inserted] = work.try_emplace(std::move(key), c * t.coeff);
        if (!inserted) {
          it->second += c * t.coeff;
          if (it->second.is_zero()) work.erase(it);
        }
      }
    }
  }
  ModuleVector rem;
  for (auto& [pos, comp] : rem_components) rem.set_component(pos, std::move(comp));
  return rem;
}

ModuleVector module_normal_form(const ModuleVector& v, const ModuleGroebnerBasis& mgb) {
  if (v.span() > mgb.rank()) throw DimensionError("module_normal_form: position outside the free module");
  return reduce_full(v, mgb.generators());
}

ModuleVector s_vector(const ModuleVector& f, const ModuleVector& g) {
  if (f.leading_position() != g.leading_position()) return ModuleVector{};
  const Monomial& lf = f.leading_term().monomial;
  const Monomial& lg = g.leading_term().monomial;
  const Monomial l = lcm(lf, lg);
  ModuleVector s;
  s.add_scaled(f, l / lf, Rational(1) / f.leading_term().coeff);
  s.add_scaled(g, l / lg, -(Rational(1) / g.leading_term().coeff));
  return s;
}

ModuleGroebnerBasis module_buchberger(std::vector<ModuleVector> gens, const GroebnerBasis& ring_ideal,
                                      std::size_t rank, const GroebnerOptions& options) {
  ModuleGroebnerBasis result(rank, ring_ideal);
  const OrderPtr& order = ring_ideal.order();

  std::vector<Element> basis;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_index;

  std::vector<ModuleVector> divisors;

  auto add_element = [&](ModuleVector v, bool ring) {
    const std::size_t k = basis.size();
    basis.push_back({std::move(v), ring});
    divisors.push_back(basis[k].vec);
    const auto pos = basis[k].vec.leading_position();
    const auto& lm = basis[k].vec.leading_term().monomial;
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].vec.leading_position() != pos) continue;
      // Pairs of ring elements reduce to zero: the ring basis is Groebner.
      if (ring && basis[i].ring) continue;
      pending.push_back({i, k, pos, lcm(basis[i].vec.leading_term().monomial, lm)});
      pending_index.emplace(i, k);
    }
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending_index.count({a, b}) > 0;
  };

  for (std::size_t p = 0; p < rank; ++p)
    for (const auto& j : ring_ideal.generators()) add_element(ModuleVector::single(p, j), true);

  for (auto& g : gens) {
    if (g.span() > rank) throw DimensionError("module_buchberger: generator outside the free module");
    ModuleVector v;
    for (const auto& [pos, comp] : g.components())
      v.set_component(pos, same_order(comp.order(), order) ? comp : comp.with_order(order));
    v = reduce_full(v, divisors);
    if (!v.is_zero()) add_element(v.monic(), false);
  }

  std::size_t reduced_pairs = 0;
  while (!pending.empty()) {
    auto best = pending.begin();
    for (auto it = pending.begin() + 1; it != pending.end(); ++it)
      if (compare_pot(it->pos, it->lcm, best->pos, best->lcm, *order) < 0) best = it;
    const Pair pair = *best;
    pending.erase(best);
    pending_index.erase({pair.i, pair.j});

    bool chain = false;
    for (std::size_t l = 0; l < basis.size() && !chain; ++l) {
      if (l == pair.i || l == pair.j || basis[l].vec.leading_position() != pair.pos) continue;
      if (basis[l].vec.leading_term().monomial.divides(pair.lcm) && !is_pending(pair.i, l) &&
          !is_pending(pair.j, l))
        chain = true;
    }
    if (chain) continue;

    if (++reduced_pairs > options.pair_budget)
      throw ResourceLimitError("module Buchberger: S-pair budget of " +
                               std::to_string(options.pair_budget) + " exceeded");
    ModuleVector r = reduce_full(s_vector(basis[pair.i].vec, basis[pair.j].vec), divisors);
    if (!r.is_zero()) add_element(r.monic(), false);
  }

  result.generators_ = reduce_module_basis(std::move(divisors), *order);
  result.pairs_reduced_ = reduced_pairs;
  return result;
}

bool verify_module_groebner(const ModuleGroebnerBasis& mgb) {
  const auto& g = mgb.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i].leading_position() != g[j].leading_position()) continue;
      if (!reduce_full(s_vector(g[i], g[j]), g).is_zero()) return false;
    }
  return true;
}

}  // namespace univalg
