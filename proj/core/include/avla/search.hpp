#pragma once

#include <vector>

#include "avla/algebra.hpp"

namespace avla {

/// Largest number of candidate diagonals the search will enumerate.
inline constexpr std::size_t kMaxDiagonalCandidates = 1'000'000;

/// Every diagonal operator with entries drawn from `values` that passes
/// validate_averaging on `a`, in lexicographic order of the diagonal (values
/// are sorted and deduplicated first). Throws InvalidInput when
/// |values|^dim exceeds kMaxDiagonalCandidates.
std::vector<AveragingOperator> search_averaging_diagonal(const LeibnizAlgebra& a, std::vector<Rational> values);

}  // namespace avla
