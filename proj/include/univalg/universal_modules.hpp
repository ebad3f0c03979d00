#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "univalg/module_groebner.hpp"
#include "univalg/pbw.hpp"
#include "univalg/representations.hpp"

namespace univalg {

/// (s, i, j) labels are 1-based.
struct LabeledRelation {
  std::size_t s, i, j;
  ModuleVector vec;
};

/// Finitely presented A-module: free on `rank` generators modulo relgens,
/// over k[X]/J.
struct PresentedAModule {
  UniversalAlgebraPtr algebra;
  std::size_t rank = 0;
  std::vector<ModuleVector> relations;
  ModuleGroebnerBasis mgb{0, GroebnerBasis(nullptr)};
  std::vector<std::string> generator_names;

  ModuleVector normal_form(const ModuleVector& v) const { return module_normal_form(v, mgb); }
  ModuleVector generator(std::size_t pos) const { return ModuleVector::unit(pos, algebra->order()); }
  std::string render(const ModuleVector& v) const { return v.to_string(algebra->variable_names(), generator_names); }
};

PresentedAModule present(const UniversalAlgebraPtr& A, std::size_t rank, std::vector<ModuleVector> relations,
                         std::vector<std::string> generator_names, const GroebnerOptions& options = {});
PresentedAModule direct_sum(const PresentedAModule& a, const PresentedAModule& b, const GroebnerOptions& options = {});

/// Substitutes generator images: sum_p v_p * images[p].
ModuleVector apply_generator_map(const ModuleVector& v, const std::vector<ModuleVector>& images);
/// Evaluates v in the finite module X with generator images given by the
/// columns of T (dim X x rank).
Vector evaluate_in(const ModuleVector& v, const MatrixARep& X, const Matrix& T);

/// Element of U (x) M for a presented module M: component s is the
/// coefficient of u_s.
using TensorElement = std::vector<ModuleVector>;

/// U(U, Z): generators Y[s,r] at position (s-1)|Z| + (r-1).
class UniversalAModule {
 public:
  UniversalAModule(UniversalAlgebraPtr A, LieModule U, LieModule Z, const GroebnerOptions& options = {});

  const UniversalAlgebraPtr& algebra() const { return A_; }
  const LieModule& U() const { return U_; }
  const LieModule& Z() const { return Z_; }
  std::size_t rank() const { return pres_.rank; }
  std::size_t position(std::size_t s, std::size_t r) const { return s * Z_.dim() + r; }
  const PresentedAModule& presentation() const { return pres_; }
  const std::vector<LabeledRelation>& relgens() const { return relgens_; }
  const ModuleGroebnerBasis& mgb() const { return pres_.mgb; }

  /// rho(z) = sum_r z_r sum_s u_s (x) Y[s,r].
  TensorElement rho(const Vector& z) const;
  /// f_j acting on U (x) U(U,Z) through the A-module structure, normal forms.
  TensorElement tensor_act(std::size_t j, const TensorElement& t) const;
  TensorElement normal_form(const TensorElement& t) const;
  std::string render(const TensorElement& t) const;

  /// Every defining relation reduces to zero, at (s, i, j).
  const Report& relation_report() const { return relation_report_; }
  /// rho(f_j -> z_r) - f_j -> rho(z_r) in normal form, at (j, r).
  const Report& equivariance_report() const { return equivariance_report_; }
  /// True iff every generator reduces to zero.
  bool collapsed() const;

 private:
  UniversalAlgebraPtr A_;
  LieModule U_, Z_;
  std::vector<LabeledRelation> relgens_;
  PresentedAModule pres_;
  Report relation_report_, equivariance_report_;
};

UniversalAModule build_universal_amodule(const UniversalAlgebraPtr& A, const LieModule& U, const LieModule& Z,
                                         const GroebnerOptions& options = {});

struct FactorizationResult {
  /// Column p is the image of generator p.
  Matrix map;
  /// One item per defining relation: its image in the target.
  Report witness;
  bool commutes = false;
  /// Rank of the generator determination system versus its unknown count.
  std::size_t system_rank = 0;
  std::size_t unknowns = 0;
  bool unique() const { return system_rank == unknowns; }
};

/// f: Z -> U (x) X must be g-equivariant (ValidationError otherwise).
FactorizationResult factorize_through_universal(const UniversalAModule& UM, const MatrixARep& X, const LinearMap& f);
/// Gamma(theta) = (id_U (x) theta) o rho, theta given by generator images.
/// Throws ValidationError if theta does not kill the relations.
LinearMap gamma(const UniversalAModule& UM, const MatrixARep& X, const Matrix& theta);
/// Whether generator images T define an A-module map U(U,Z) -> X.
Report check_well_defined(const UniversalAModule& UM, const MatrixARep& X, const Matrix& T);

/// f-bar for a g-module map f: Z -> Z'. Generator images Y[s,r] -> sum_q F(q,r) Y'[s,q].
struct PresentedMap {
  std::vector<ModuleVector> images;
  /// Scalar matrix of the images (rank' x rank).
  Matrix matrix;
  /// Each source relation maps into the target relations: witness at (s,i,j).
  Report certificate;
};

PresentedMap functor_on_morphism_U(const UniversalAModule& source, const UniversalAModule& target, const LinearMap& f);

struct DirectSumCertificate {
  /// U(U, W1 (+) W2) -> U(U,W1) (+) U(U,W2) and back, on generators.
  Matrix forward, backward;
  Report report;
  bool passed() const { return report.passed(); }
};

DirectSumCertificate direct_sum_check(const UniversalAlgebraPtr& A, const LieModule& U, const LieModule& W1,
                                      const LieModule& W2);

/// Element of the free U(h)-module on the generators Y[r,s]; components are
/// PBW normal forms.
class FreeLieElement {
 public:
  const std::map<std::size_t, PBWElement>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  void add(std::size_t pos, const PBWElement& x);
  FreeLieElement& operator+=(const FreeLieElement& o);
  FreeLieElement& operator*=(const Rational& s);
  friend bool operator==(const FreeLieElement&, const FreeLieElement&) = default;
  /// e_t acting on the left.
  FreeLieElement act(const LieAlgebra& h, std::uint32_t t) const;
  std::string to_string(const std::vector<std::string>& generator_names) const;

 private:
  std::map<std::size_t, PBWElement> comps_;
};

/// V(V, W): generators Y[r,s] at position (r-1)l + (s-1), l = dim V.
class UniversalLieHModule {
 public:
  UniversalLieHModule(MatrixARep V, LieModule W);

  const UniversalAlgebraPtr& algebra() const { return V_.owner(); }
  const MatrixARep& V() const { return V_; }
  const LieModule& W() const { return W_; }
  std::size_t rank() const { return W_.dim() * V_.dim(); }
  std::size_t position(std::size_t r, std::size_t s) const { return r * V_.dim() + s; }
  const std::vector<std::string>& generator_names() const { return names_; }
  /// Labels (s, r, j).
  const std::vector<std::pair<std::array<std::size_t, 3>, FreeLieElement>>& relgens() const { return relgens_; }
  /// tau(w_r) = sum_s Y[r,s] (x) v_s; entry s of the result is the coefficient of v_s.
  std::vector<FreeLieElement> tau(std::size_t r) const;
  /// Evaluates x in Y with generator images the columns of C.
  Vector evaluate_in(const FreeLieElement& x, const LieModule& Y, const Matrix& C) const;

 private:
  MatrixARep V_;
  LieModule W_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::array<std::size_t, 3>, FreeLieElement>> relgens_;
};

UniversalLieHModule build_universal_lie_hmodule(const MatrixARep& V, const LieModule& W);

/// f: W -> Y (x) V must be g-equivariant for the tensor action.
FactorizationResult factorize_lie(const UniversalLieHModule& VM, const LieModule& Y, const LinearMap& f);
/// (theta (x) id_V) o tau; ValidationError if theta does not kill the relations.
LinearMap gamma_lie(const UniversalLieHModule& VM, const LieModule& Y, const Matrix& theta);
Report check_well_defined_lie(const UniversalLieHModule& VM, const LieModule& Y, const Matrix& C);

struct PresentedLieMap {
  /// Generator-level scalar matrix: Y[r,s] -> sum_q F(q,r) Y'[q,s].
  Matrix matrix;
  /// Each mapped source relation lies in the span of the target relations.
  Report certificate;
};

PresentedLieMap functor_on_morphism_V(const UniversalLieHModule& source, const UniversalLieHModule& target,
                                      const LinearMap& f);

DirectSumCertificate direct_sum_check_lie(const MatrixARep& V, const LieModule& W1, const LieModule& W2);

}  // namespace univalg
