#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "univalg/groebner.hpp"

namespace univalg {

/// Element of a free module over a polynomial ring: position -> component.
/// Zero components are never stored.
class ModuleVector {
 public:
  ModuleVector() = default;
  static ModuleVector unit(std::size_t position, const OrderPtr& order);
  static ModuleVector single(std::size_t position, Polynomial p);

  const std::map<std::size_t, Polynomial>& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  /// Component at `position` (zero polynomial with the given order if absent).
  Polynomial component(std::size_t position, const OrderPtr& order) const;
  void set_component(std::size_t position, Polynomial p);
  /// One past the largest nonzero position.
  std::size_t span() const { return components_.empty() ? 0 : components_.rbegin()->first + 1; }

  /// Position-over-term leading data: smallest position, then its leading term.
  std::size_t leading_position() const { return components_.begin()->first; }
  const Term& leading_term() const { return components_.begin()->second.leading_term(); }

  /// Removes the leading term (at leading_position()) and returns it.
  Term pop_leading();

  /// this += c * m * v.
  void add_scaled(const ModuleVector& v, const Monomial& m, const Rational& c);
  /// this += p * v.
  void add_multiple(const ModuleVector& v, const Polynomial& p);

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Rational& s);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(ModuleVector a, const Rational& s) { return a *= s; }
  friend ModuleVector operator*(const Polynomial& p, const ModuleVector& v);
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  ModuleVector monic() const;

  /// Canonical rendering in position-over-term order, e.g.
  /// "2*X[1,2]*Y[1,1] - Y[2,1]".
  std::string to_string(const std::vector<std::string>& var_names,
                        const std::vector<std::string>& gen_names) const;

 private:
  std::map<std::size_t, Polynomial> components_;
};

/// Reduced Groebner basis of a submodule of a free module of finite rank
/// under the position-over-term order (position 0 is the largest). The
/// elements j*e_p for j in the ring ideal are part of the basis, so normal
/// forms are taken over the quotient ring.
class ModuleGroebnerBasis {
 public:
  ModuleGroebnerBasis(std::size_t rank, GroebnerBasis ring_ideal)
      : rank_(rank), ring_ideal_(std::move(ring_ideal)) {}

  std::size_t rank() const { return rank_; }
  const OrderPtr& order() const { return ring_ideal_.order(); }
  const GroebnerBasis& ring_ideal() const { return ring_ideal_; }
  const std::vector<ModuleVector>& generators() const { return generators_; }
  std::size_t pairs_reduced() const { return pairs_reduced_; }

  friend bool operator==(const ModuleGroebnerBasis& a, const ModuleGroebnerBasis& b) {
    return a.rank_ == b.rank_ && a.generators_ == b.generators_;
  }

 private:
  friend ModuleGroebnerBasis module_buchberger(std::vector<ModuleVector>, const GroebnerBasis&,
                                               std::size_t, const GroebnerOptions&);
  std::size_t rank_;
  GroebnerBasis ring_ideal_;
  std::vector<ModuleVector> generators_;
  std::size_t pairs_reduced_ = 0;
};

/// Compares module leading terms under position-over-term.
std::strong_ordering compare_pot(std::size_t pos_a, const Monomial& a, std::size_t pos_b,
                                 const Monomial& b, const MonomialOrder& order);

ModuleGroebnerBasis module_buchberger(std::vector<ModuleVector> gens, const GroebnerBasis& ring_ideal,
                                      std::size_t rank, const GroebnerOptions& options = {});

ModuleVector reduce_full(const ModuleVector& v, const std::vector<ModuleVector>& divisors);
ModuleVector module_normal_form(const ModuleVector& v, const ModuleGroebnerBasis& mgb);

ModuleVector s_vector(const ModuleVector& f, const ModuleVector& g);
bool verify_module_groebner(const ModuleGroebnerBasis& mgb);

}  // namespace univalg
