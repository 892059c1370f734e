#pragma once

#include <optional>
#include <vector>

#include "avla/algebra.hpp"

namespace avla {

/// Representation (M, l, r[, θ_M]) of a Leibniz algebra.
///
/// Actions are stored per basis element of the algebra so that differentials
/// assemble from matrix products only:
///   left[i]  is the m x m matrix of a |-> l(e_i, a)
///   right[j] is the m x m matrix of a |-> r(a, e_j)
struct Representation {
  LeibnizAlgebra algebra;
  std::size_t mdim = 0;
  std::vector<RatMatrix> left;
  std::vector<RatMatrix> right;
  std::optional<RatMatrix> theta_m;

  std::size_t gdim() const noexcept { return algebra.dim(); }

  /// Throws InvalidInput unless every tensor has the documented shape.
  void check_shape() const;

  RatVector act_left(std::span<const Rational> u, std::span<const Rational> a) const;
  RatVector act_right(std::span<const Rational> a, std::span<const Rational> u) const;
  /// Matrix of a |-> l(u, a) for a general u.
  RatMatrix left_matrix(std::span<const Rational> u) const;
  /// Matrix of a |-> r(a, u) for a general u.
  RatMatrix right_matrix(std::span<const Rational> u) const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// The three representation identities on all (e_i, e_j, e_a); witness tags "1", "2", "3".
ValidationReport validate_representation(const Representation& rep);

/// The two averaging compatibility chains, four equalities, on all (e_i, e_a).
/// Throws InvalidInput when the representation carries no θ_M.
ValidationReport validate_averaging_representation(const Representation& rep, const AveragingOperator& t);

/// M = g with l = r = bracket; θ_M = t when given.
Representation self_representation(const LeibnizAlgebra& a, const std::optional<AveragingOperator>& t = std::nullopt);

/// Strict: l'(e_i) = l(θe_i), r'(e_j) = r(θe_j).
/// Sum:    l'(e_i) = l(θe_i) - θ_M l(e_i), r'(e_j) = r(θe_j) - θ_M r(e_j).
/// The result is attached to the induced algebra of the same mode; θ_M carries over.
Representation induced_representation(const Representation& rep, const AveragingOperator& t, InducedMode mode);

/// Residuals of l(θu, a) + θ_M l(u, a) and r(a, θu) + θ_M r(a, u): the
/// claimed equality of the two expressions for the induced actions.
ValidationReport check_induced_action_sign(const Representation& rep, const AveragingOperator& t);

}  // namespace avla
