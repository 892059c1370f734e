#pragma once

#include <optional>
#include <vector>

#include "avla/matrix.hpp"

namespace avla {

struct EchelonForm {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
EchelonForm rref(RatMatrix a);

std::size_t rank(const RatMatrix& a);

/// Basis of {x : a x = 0}, one vector per free column, with that free
/// variable set to 1 and the other free variables set to 0.
std::vector<RatVector> kernel_basis(const RatMatrix& a);

/// Some x with a x = b, or nullopt when b is outside the column space.
/// Free variables are set to 0, so the answer is deterministic.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

}  // namespace avla
