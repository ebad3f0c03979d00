#pragma once

#include <cstddef>
#include <vector>

#include "univalg/polynomial.hpp"

namespace univalg {

inline constexpr std::size_t kDefaultPairBudget = 100000;

/// Default budget, overridden by the UNIVALG_BUDGET environment variable.
std::size_t default_pair_budget();

struct GroebnerOptions {
  /// Maximum number of S-pairs that may be reduced before giving up with a
  /// ResourceLimitError.
  std::size_t pair_budget = default_pair_budget();
};

/// Reduced Groebner basis: monic generators, each fully reduced against the
/// others, sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(OrderPtr order) : order_(std::move(order)) {}

  const OrderPtr& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  /// True iff the ideal is the whole ring.
  bool is_unit() const;
  std::size_t pairs_reduced() const { return pairs_reduced_; }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_order(a.order_, b.order_) && a.generators_ == b.generators_;
  }

 private:
  friend GroebnerBasis buchberger(std::vector<Polynomial>, OrderPtr, const GroebnerOptions&);
  OrderPtr order_;
  std::vector<Polynomial> generators_;
  std::size_t pairs_reduced_ = 0;
};

GroebnerBasis buchberger(std::vector<Polynomial> gens, OrderPtr order,
                         const GroebnerOptions& options = {});

/// Full reduction of p by an arbitrary divisor list (remainder has no term
/// divisible by any divisor's leading monomial).
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& divisors);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
/// Re-checks that every S-polynomial of the basis reduces to zero.
bool verify_groebner(const GroebnerBasis& gb);
/// Re-checks the reduced-basis conditions (monic, interreduced, sorted).
bool is_reduced(const GroebnerBasis& gb);

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const OrderPtr& order, const GroebnerOptions& options = {});

}  // namespace univalg
