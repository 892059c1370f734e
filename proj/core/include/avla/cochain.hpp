#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "avla/representation.hpp"

namespace avla {

/// Highest cochain degree accepted as the source of a differential.
inline constexpr std::size_t kMaxCochainDegree = 4;

/// dim Hom(g^{⊗n}, M) = m * g^n.
std::size_t cochain_dim(std::size_t n, std::size_t gdim, std::size_t mdim);

/// Lexicographic rank of a multi-index, first index most significant.
std::size_t tuple_rank(std::span<const std::size_t> tuple, std::size_t gdim);
std::vector<std::size_t> tuple_unrank(std::size_t rank, std::size_t arity, std::size_t gdim);

/// Element of Hom(g^{⊗n}, M) in coordinates: the p-th output coordinate at
/// basis input (i_1..i_n) lives at coeffs[tuple_rank(i) * m + p].
struct MultilinearMap {
  std::size_t arity = 0;
  std::size_t gdim = 0;
  std::size_t mdim = 0;
  RatVector coeffs;

  static MultilinearMap zero(std::size_t arity, std::size_t gdim, std::size_t mdim);
  /// The basis cochain with a single 1 at flat coordinate `index`.
  static MultilinearMap basis(std::size_t arity, std::size_t gdim, std::size_t mdim, std::size_t index);
  /// A linear map g -> M given as an m x g matrix (column j = image of e_j).
  static MultilinearMap from_linear(const RatMatrix& map);
  /// Wraps a flat coordinate vector of length m * g^n.
  static MultilinearMap from_coeffs(std::size_t arity, std::size_t gdim, std::size_t mdim, RatVector coeffs);

  std::size_t size() const noexcept { return coeffs.size(); }
  std::size_t index(std::span<const std::size_t> tuple, std::size_t p) const;
  /// Value on basis arguments; throws InvalidInput on bad arity or index.
  RatVector eval(std::span<const std::size_t> args) const;
  /// For arity 1: the m x g matrix of the linear map.
  RatMatrix as_linear() const;
  bool is_zero() const { return avla::is_zero(coeffs); }

  MultilinearMap& operator+=(const MultilinearMap& o);
  MultilinearMap& operator-=(const MultilinearMap& o);
  friend MultilinearMap operator+(MultilinearMap a, const MultilinearMap& b) { return a += b; }
  friend MultilinearMap operator-(MultilinearMap a, const MultilinearMap& b) { return a -= b; }
  friend MultilinearMap operator*(const Rational& s, MultilinearMap a);
  friend bool operator==(const MultilinearMap&, const MultilinearMap&) = default;
};

/// Cochain of the mapping-cone complex: degree n carries (f, h) with f of
/// arity n and h of arity n-1; degree 0 carries f only.
struct ConeCochain {
  MultilinearMap f;
  std::optional<MultilinearMap> h;

  std::size_t degree() const noexcept { return f.arity; }
  /// f coordinates followed by h coordinates.
  RatVector flatten() const;
  static ConeCochain unflatten(std::size_t degree, std::size_t gdim, std::size_t mdim, std::span<const Rational> flat);
  friend bool operator==(const ConeCochain&, const ConeCochain&) = default;
};

std::size_t cone_dim(std::size_t n, std::size_t gdim, std::size_t mdim);

/// Leibniz coboundary of f with coefficients in rep.
MultilinearMap delta(const Representation& rep, const MultilinearMap& f);

/// Operator coboundary. Sum evaluates the expanded formula term by term;
/// Strict is delta over the Strict induced algebra and representation.
MultilinearMap partial_avg(const Representation& rep, const AveragingOperator& t, const MultilinearMap& f,
                           InducedMode mode);

/// f(θu_1,..,θu_n) - sum_k θ_M f(θu_1,..,u_k,..,θu_n). Arity 0 is the identity.
MultilinearMap phi(const AveragingOperator& t, const RatMatrix& theta_m, const MultilinearMap& f);

/// d^n(f, h) = (δf, -φf - ∂h); d^0(a) = (δa, -a).
ConeCochain cone_differential(const Representation& rep, const AveragingOperator& t, InducedMode mode,
                              const ConeCochain& x);

/// φ^{n+1}(δ f) - ∂(φ^n f).
MultilinearMap chain_map_residual(const Representation& rep, const AveragingOperator& t, InducedMode mode,
                                  const MultilinearMap& f);

enum class CochainOperator { Delta, PartialAvg, Phi, Cone, ChainMapResidual };

const char* to_string(CochainOperator op);

/// Coordinate matrix of an operator out of degree n (columns: degree-n basis
/// cochains, rows: target coordinates, in the MultilinearMap layout; for Cone
/// the f block precedes the h block). `t` is required for all operators but
/// Delta; θ_M is read from `rep`.
RatMatrix matrix_of(CochainOperator op, std::size_t n, const Representation& rep,
                    const std::optional<AveragingOperator>& t = std::nullopt,
                    InducedMode mode = InducedMode::Strict);

}  // namespace avla
