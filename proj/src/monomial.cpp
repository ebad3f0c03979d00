#include "univalg/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace univalg {

namespace {

std::vector<Monomial::Entry> normalize(std::vector<Monomial::Entry> entries) {
  std::sort(entries.begin(), entries.end());
  std::vector<Monomial::Entry> out;
  for (const auto& [var, exp] : entries) {
    if (exp == 0) continue;
    if (!out.empty() && out.back().first == var)
      out.back().second += exp;
    else
      out.emplace_back(var, exp);
  }
  return out;
}

}  // namespace

Monomial::Monomial(std::initializer_list<Entry> entries)
    : entries_(normalize(std::vector<Entry>(entries))) {}

Monomial::Monomial(std::vector<Entry> entries) : entries_(normalize(std::move(entries))) {}

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exp) { return Monomial{{var, exp}}; }

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0});
  return (it != entries_.end() && it->first == var) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.entries_.begin();
  for (const auto& [var, exp] : entries_) {
    while (it != other.entries_.end() && it->first < var) ++it;
    if (it == other.entries_.end() || it->first != var || it->second < exp) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto& out = m.entries_;
  out.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto j = b.entries_.begin();
  for (const auto& [var, exp] : a.entries_) {
    std::uint32_t sub = 0;
    if (j != b.entries_.end() && j->first == var) sub = (j++)->second;
    if (sub > exp) throw std::invalid_argument("Monomial division: not divisible");
    if (exp > sub) m.entries_.emplace_back(var, exp - sub);
  }
  if (j != b.entries_.end()) throw std::invalid_argument("Monomial division: not divisible");
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      m.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      m.entries_.push_back(*j++);
    } else {
      m.entries_.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return m;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& [var, exp] : entries_) {
    if (!out.empty()) out += '*';
    out += var < names.size() ? names[var] : "x" + std::to_string(var);
    if (exp > 1) out += "^" + std::to_string(exp);
  }
  return out;
}

}  // namespace univalg
