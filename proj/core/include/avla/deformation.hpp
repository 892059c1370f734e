#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "avla/cohomology.hpp"

namespace avla {

/// Order-N jet of a deformation of (bracket, θ): mu[i] is the bilinear
/// coefficient of t^i (arity 2, values in the algebra), theta[i] the operator
/// coefficient. mu[0] and theta[0] are the base structure.
struct TruncatedDeformation {
  std::size_t order = 0;
  std::vector<MultilinearMap> mu;
  std::vector<RatMatrix> theta;

  std::size_t dim() const { return mu.empty() ? 0 : mu.front().gdim; }
  /// Throws InvalidInput unless both lists have order+1 entries of matching shape.
  void check() const;
  /// The first `n`+1 coefficients.
  TruncatedDeformation truncated(std::size_t n) const;
  /// μ_i = θ_i = 0 for i >= 1.
  static TruncatedDeformation constant(const LeibnizAlgebra& a, const AveragingOperator& t, std::size_t order);
  friend bool operator==(const TruncatedDeformation&, const TruncatedDeformation&) = default;
};

/// ψ_t = Σ ψ_i t^i with ψ_0 the identity.
struct FormalIsomorphism {
  std::size_t order = 0;
  std::vector<RatMatrix> psi;

  /// Throws InvalidInput on a length mismatch, a non-square entry or ψ_0 != id.
  void check() const;
  static FormalIsomorphism identity(std::size_t dim, std::size_t order);
  friend bool operator==(const FormalIsomorphism&, const FormalIsomorphism&) = default;
};

/// Bracket as a 2-cochain with values in the algebra. Coordinates coincide
/// with the structure-constant layout.
MultilinearMap bracket_cochain(const LeibnizAlgebra& a);
LeibnizAlgebra algebra_of(const MultilinearMap& mu);

/// Throws InvalidInput when mu[0] or theta[0] differ from the given base.
void check_base(const TruncatedDeformation& d, const LeibnizAlgebra& a, const AveragingOperator& t);

/// The deformation equations at every order 0..N. Tags: "eq1" on triples,
/// "eq2:left=middle" and "eq2:left=right" on pairs; witness order = n.
ValidationReport check_deformation_order(const TruncatedDeformation& d);

struct CocycleReport {
  ValidationReport report;      // tags "delta" and "operator"
  bool delta_passed = true;     // δ²μ₁ = 0
  bool operator_passed = true;  // -φ²μ₁ - ∂¹θ₁ = 0
};

/// Whether d²(μ₁, θ₁) vanishes in the cone complex of the self-representation.
CocycleReport check_cocycle(const LeibnizAlgebra& a, const AveragingOperator& t, const MultilinearMap& mu1,
                            const RatMatrix& theta1, InducedMode mode);

/// ψ_t relates d' to d: ψ_t μ'_t = μ_t(ψ_t, ψ_t) and ψ_t θ'_t = θ_t ψ_t,
/// order by order. Tags "bracket" on pairs and "operator" on columns.
ValidationReport check_equivalence(const TruncatedDeformation& d, const TruncatedDeformation& d_prime,
                                   const FormalIsomorphism& p);

struct Trivializer {
  RatMatrix psi1;  // g x g
  RatVector u;     // degree-0 component, length g
};

/// Some (ψ₁, u) with d¹(ψ₁, u) = (μ₁, θ₁), or nullopt.
std::optional<Trivializer> find_trivializer(const LeibnizAlgebra& a, const AveragingOperator& t,
                                            const MultilinearMap& mu1, const RatMatrix& theta1, InducedMode mode);

/// d¹(ψ₁, u) split into its (μ₁, θ₁) components.
std::pair<MultilinearMap, RatMatrix> cone_image(const LeibnizAlgebra& a, const AveragingOperator& t,
                                                const Trivializer& x, InducedMode mode);

struct RigidityVerdict {
  enum class Kind { Rigid, Inconclusive, ComplexInvalid };
  Kind kind = Kind::Rigid;
  std::size_t h2 = 0;                     // meaningful unless ComplexInvalid
  std::optional<ComplexInvalid> defect;   // set for ComplexInvalid
};

const char* to_string(RigidityVerdict::Kind k);

/// Audits the cone complex of the self-representation at degrees 0..2 and
/// reads off dim H². A nonzero H² proves nothing, hence Inconclusive.
RigidityVerdict rigidity_report(const LeibnizAlgebra& a, const AveragingOperator& t, InducedMode mode);

/// The order-1 deformation equations as linear maps of (μ₁, θ₁), with the
/// unknowns laid out as a degree-2 cone cochain (μ₁ coordinates, then θ₁ as
/// a 1-cochain). Rows follow the residual layout of each equation.
enum class FirstOrderEquation { Eq1, LeftMiddle, LeftRight, Merged };
RatMatrix first_order_matrix(const LeibnizAlgebra& a, const AveragingOperator& t, FirstOrderEquation which);

}  // namespace avla
