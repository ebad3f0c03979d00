#include "univalg/pbw.hpp"

#include <algorithm>

#include "univalg/errors.hpp"

namespace univalg {

bool is_sorted_word(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

PBWElement PBWElement::word(Word w, const Rational& c) {
  PBWElement x;
  x.add_term(w, c);
  return x;
}

bool PBWElement::is_normal() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_sorted_word(t.first); });
}

Rational PBWElement::coefficient(const Word& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PBWElement::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

PBWElement& PBWElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

std::string PBWElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < w.size();) {
      std::size_t run = 1;
      while (k + run < w.size() && w[k + run] == w[k]) ++run;
      if (!mono.empty()) mono += "*";
      mono += "e" + std::to_string(w[k] + 1);
      if (run > 1) mono += "^" + std::to_string(run);
      k += run;
    }
    const Rational mag = c.sign() < 0 ? -c : c;
    std::string body;
    if (mono.empty()) body = mag.to_string();
    else body = mag.is_one() ? mono : mag.to_string() + "*" + mono;
    if (first) out = (c.sign() < 0 ? "-" : "") + body;
    else out += (c.sign() < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

PBWElement normalize(const LieAlgebra& h, const PBWElement& x, RewriteStrategy strategy) {
  PBWElement done;
  std::vector<std::pair<Word, Rational>> work(x.terms().begin(), x.terms().end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    for (auto letter : w)
      if (letter >= h.dim()) throw DimensionError("normalize: letter outside the basis of h");
    std::size_t pos = w.size();
    if (strategy == RewriteStrategy::leftmost) {
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] > w[k + 1]) {
          pos = k;
          break;
        }
    } else {
      for (std::size_t k = w.size(); k-- > 1;)
        if (w[k - 1] > w[k]) {
          pos = k - 1;
          break;
        }
    }
    if (pos == w.size()) {
      done.add_term(w, c);
      continue;
    }
    const std::uint32_t j = w[pos], i = w[pos + 1];
    for (std::size_t s = 0; s < h.dim(); ++s) {
      const Rational& b = h.constant(j, i, s);
      if (b.is_zero()) continue;
      Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      shorter.push_back(static_cast<std::uint32_t>(s));
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
      work.emplace_back(std::move(shorter), c * b);
    }
    std::swap(w[pos], w[pos + 1]);
    work.emplace_back(std::move(w), c);
  }
  return done;
}

PBWElement multiply(const LieAlgebra& h, const PBWElement& a, const PBWElement& b) {
  PBWElement raw;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      raw.add_term(w, ca * cb);
    }
  return normalize(h, raw);
}

Matrix word_action(const LieModule& M, const Word& w) {
  Matrix m = Matrix::identity(M.dim());
  for (auto letter : w) m = m * M.action(letter);
  return m;
}

Matrix pbw_action(const LieModule& M, const PBWElement& x) {
  Matrix m(M.dim(), M.dim());
  for (const auto& [w, c] : x.terms()) m += word_action(M, w) * c;
  return m;
}

}  // namespace univalg
