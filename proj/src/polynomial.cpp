#include "univalg/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "univalg/errors.hpp"

namespace univalg {

std::string to_string(OrderKind kind) { return kind == OrderKind::lex ? "lex" : "degrevlex"; }

OrderKind parse_order_kind(const std::string& text) {
  if (text == "degrevlex") return OrderKind::degrevlex;
  if (text == "lex") return OrderKind::lex;
  throw ParseError("unknown monomial order '" + text + "'");
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars)
    : kind_(kind), ranking_(nvars), rank_of_(nvars) {
  std::iota(ranking_.begin(), ranking_.end(), 0U);
  std::iota(rank_of_.begin(), rank_of_.end(), 0U);
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::uint32_t> ranking)
    : kind_(kind), ranking_(std::move(ranking)), rank_of_(ranking_.size()) {
  std::vector<bool> seen(ranking_.size(), false);
  for (std::uint32_t k = 0; k < ranking_.size(); ++k) {
    const auto v = ranking_[k];
    if (v >= ranking_.size() || seen[v]) throw std::invalid_argument("ranking is not a permutation");
    seen[v] = true;
    rank_of_[v] = k;
  }
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == OrderKind::degrevlex) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da <=> db;
  }
  // Walk the union of supports, remembering the decisive variable: the
  // smallest rank for lex, the largest rank for degrevlex.
  bool found = false;
  std::uint32_t best_rank = 0;
  std::strong_ordering verdict = std::strong_ordering::equal;
  auto consider = [&](std::uint32_t var, std::uint32_t ea, std::uint32_t eb) {
    if (ea == eb) return;
    const auto r = rank_of_.at(var);
    const bool better = !found || (kind_ == OrderKind::lex ? r < best_rank : r > best_rank);
    if (!better) return;
    found = true;
    best_rank = r;
    if (kind_ == OrderKind::lex)
      verdict = ea <=> eb;
    else
      verdict = eb <=> ea;
  };
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  auto i = ea.begin();
  auto j = eb.begin();
  while (i != ea.end() || j != eb.end()) {
    if (j == eb.end() || (i != ea.end() && i->first < j->first)) {
      consider(i->first, i->second, 0);
      ++i;
    } else if (i == ea.end() || j->first < i->first) {
      consider(j->first, 0, j->second);
      ++j;
    } else {
      consider(i->first, i->second, j->second);
      ++i;
      ++j;
    }
  }
  return verdict;
}

OrderPtr make_order(OrderKind kind, std::size_t nvars) {
  return std::make_shared<const MonomialOrder>(kind, nvars);
}

bool same_order(const OrderPtr& a, const OrderPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Polynomial::Polynomial(OrderPtr order, std::vector<Term> terms) : order_(std::move(order)) {
  if (!order_) throw std::invalid_argument("Polynomial: null order");
  std::sort(terms.begin(), terms.end(), [this](const Term& x, const Term& y) {
    return order_->compare(x.monomial, y.monomial) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(OrderPtr order, const Rational& c) {
  Polynomial p(std::move(order));
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(OrderPtr order, std::uint32_t var) {
  return monomial(std::move(order), Monomial::variable(var));
}

Polynomial Polynomial::monomial(OrderPtr order, Monomial m, const Rational& c) {
  Polynomial p(std::move(order));
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return Rational(0);
}

Polynomial Polynomial::truncate_degree(std::uint32_t d) const {
  Polynomial p(order_);
  for (const auto& t : terms_)
    if (t.monomial.degree() <= d) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p(*this);
  const Rational inv = Rational(1) / leading_coeff();
  for (auto& t : p.terms_) t.coeff *= inv;
  return p;
}

Polynomial Polynomial::with_order(OrderPtr order) const { return Polynomial(std::move(order), terms_); }

void Polynomial::require_compatible(const Polynomial& o) const {
  if (!same_order(order_, o.order_)) {
    // A default-constructed zero polynomial adopts the partner's order.
    if (order_ == nullptr && terms_.empty()) return;
    if (o.order_ == nullptr && o.terms_.empty()) return;
    throw MismatchError("polynomials carry different monomial orders");
  }
}

void Polynomial::add_scaled(const Polynomial& q, const Monomial& m, const Rational& c) {
  require_compatible(q);
  if (c.is_zero() || q.is_zero()) return;
  if (!order_) order_ = q.order_;
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto i = terms_.begin();
  auto j = q.terms_.begin();
  const bool unit = m.is_one();
  Monomial scratch;
  while (i != terms_.end() || j != q.terms_.end()) {
    if (j == q.terms_.end()) {
      out.push_back(std::move(*i++));
      continue;
    }
    scratch = unit ? j->monomial : j->monomial * m;
    if (i == terms_.end()) {
      out.push_back({std::move(scratch), c * j->coeff});
      ++j;
      continue;
    }
    const auto cmp = order_->compare(i->monomial, scratch);
    if (cmp > 0) {
      out.push_back(std::move(*i++));
    } else if (cmp < 0) {
      out.push_back({std::move(scratch), c * j->coeff});
      ++j;
    } else {
      Rational s = i->coeff + c * j->coeff;
      if (!s.is_zero()) out.push_back({std::move(i->monomial), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Term Polynomial::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

void Polynomial::push_smallest(Term t) {
  if (t.coeff.is_zero()) return;
  terms_.push_back(std::move(t));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  add_scaled(o, Monomial{}, Rational(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  add_scaled(o, Monomial{}, Rational(-1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial p(order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of terms.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial out(a.order_ ? a.order_ : b.order_);
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) raw.push_back({x.monomial * y.monomial, x.coeff * y.coeff});
  return Polynomial(out.order_, std::move(raw));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.terms_.empty()) return true;
  return same_order(a.order_, b.order_);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff.sign() < 0;
    const Rational mag = negative ? -t.coeff : t.coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += t.monomial.to_string(names);
    }
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images,
                      const OrderPtr& target) {
  Polynomial out(target);
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (const auto& [var, exp] : t.monomial.entries()) {
      if (var >= images.size()) throw DimensionError("substitute: missing image for variable");
      for (std::uint32_t e = 0; e < exp; ++e) prod = prod * images[var];
    }
    out += prod;
  }
  return out;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace univalg
