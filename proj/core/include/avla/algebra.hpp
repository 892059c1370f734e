#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "avla/matrix.hpp"

namespace avla {

enum class Convention { Left, Right };

/// How the averaging operator is folded into an induced bracket or action.
///  - Strict: left-lift, [u, v]_* = [θu, v].
///  - Sum:    [u, v]_* = [θu, v] + [u, θv], with actions corrected by -θ_M.
enum class InducedMode { Strict, Sum };

const char* to_string(Convention c);
const char* to_string(InducedMode m);

/// Finite-dimensional algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i, j, k) e_k, indices 0-based.
class LeibnizAlgebra {
 public:
  LeibnizAlgebra() = default;
  /// `constants` has dim^3 entries in (i, j, k) row-major order.
  LeibnizAlgebra(std::size_t dim, std::vector<Rational> constants);
  static LeibnizAlgebra zero(std::size_t dim) { return LeibnizAlgebra(dim, std::vector<Rational>(dim * dim * dim)); }

  std::size_t dim() const noexcept { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Rational>& constants() const noexcept { return c_; }

  RatVector bracket(std::span<const Rational> u, std::span<const Rational> v) const;
  RatVector bracket_basis(std::size_t i, std::size_t j) const;

  friend bool operator==(const LeibnizAlgebra&, const LeibnizAlgebra&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Linear operator θ on the algebra, as a dim x dim matrix acting on column
/// coordinates: θ(e_j) = sum_i matrix(i, j) e_i.
class AveragingOperator {
 public:
  AveragingOperator() = default;
  explicit AveragingOperator(RatMatrix matrix);

  const RatMatrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  RatVector apply(std::span<const Rational> v) const { return m_.apply(v); }
  RatVector image_of_basis(std::size_t j) const { return m_.column(j); }

  friend bool operator==(const AveragingOperator&, const AveragingOperator&) = default;

 private:
  RatMatrix m_;
};

struct Witness {
  std::vector<std::size_t> tuple;  // 0-based basis indices
  RatVector residual;              // left-hand side minus right-hand side
  std::string tag;                 // which identity failed
  int order = -1;                  // deformation order, when relevant
};

/// Outcome of checking an identity on every basis tuple.
/// Witnesses are kept in lexicographic tuple order, capped at kMaxWitnesses;
/// failure_count counts every failing (tuple, identity) pair.
struct ValidationReport {
  static constexpr std::size_t kMaxWitnesses = 16;

  std::vector<Witness> witnesses;
  std::size_t failure_count = 0;

  bool passed() const noexcept { return failure_count == 0; }
  void record(Witness w);
  void merge(const ValidationReport& other);
};

/// Left:  [u,[v,w]] = [[u,v],w] + [v,[u,w]]
/// Right: [[u,v],w] = [[u,w],v] + [u,[v,w]]
ValidationReport validate_leibniz(const LeibnizAlgebra& a, Convention conv);

/// [θu, θv] = θ[θu, v] = θ[u, θv] on all basis pairs. Tags "left=middle" and "left=right".
ValidationReport validate_averaging(const LeibnizAlgebra& a, const AveragingOperator& t);

LeibnizAlgebra induced_algebra(const LeibnizAlgebra& a, const AveragingOperator& t, InducedMode mode);

struct MorphismReport {
  ValidationReport report;
  bool isomorphism = false;
};

/// p : A -> A' with p(dim(A') x dim(A)). Checks p[x,y] = [px,py] and θ'p = pθ.
MorphismReport check_morphism(const LeibnizAlgebra& a, const LeibnizAlgebra& a_prime,
                              const AveragingOperator& t, const AveragingOperator& t_prime,
                              const RatMatrix& p);

/// Residuals of [θe_i, e_j] - [e_i, θe_j] on all basis pairs.
ValidationReport check_lift_symmetry(const LeibnizAlgebra& a, const AveragingOperator& t);

}  // namespace avla
