#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "univalg/lie.hpp"

namespace univalg {

/// Word in the basis e_1..e_n of h (0-based letters).
using Word = std::vector<std::uint32_t>;

/// Shorter words first, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

bool is_sorted_word(const Word& w);

enum class RewriteStrategy { leftmost, rightmost };

/// Element of the enveloping algebra of h. After normalize() every word is
/// sorted nondecreasing (PBW basis).
class PBWElement {
 public:
  PBWElement() = default;
  static PBWElement one() { return word({}); }
  static PBWElement word(Word w, const Rational& c = Rational(1));

  const std::map<Word, Rational, WordLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest word length, or 0 for zero.
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }
  bool is_normal() const;
  Rational coefficient(const Word& w) const;

  void add_term(const Word& w, const Rational& c);
  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  PBWElement& operator*=(const Rational& s);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(PBWElement a, const Rational& s) { return a *= s; }
  friend bool operator==(const PBWElement&, const PBWElement&) = default;

  /// Rendering from the longest word down, e.g. "2*e1*e2^2 - e3 + 1".
  std::string to_string() const;

 private:
  std::map<Word, Rational, WordLess> terms_;
};

/// Rewrites e_j e_i -> e_i e_j + [e_j, e_i] (j > i) until all words are sorted.
PBWElement normalize(const LieAlgebra& h, const PBWElement& x,
                     RewriteStrategy strategy = RewriteStrategy::leftmost);
/// Product of two elements, normalized.
PBWElement multiply(const LieAlgebra& h, const PBWElement& a, const PBWElement& b);

/// Matrix by which a word acts on a Lie module (last letter acts first).
Matrix word_action(const LieModule& M, const Word& w);
Matrix pbw_action(const LieModule& M, const PBWElement& x);

}  // namespace univalg
