#include "avla/search.hpp"

#include <algorithm>

#include "avla/errors.hpp"

namespace avla {

std::vector<AveragingOperator> search_averaging_diagonal(const LeibnizAlgebra& a, std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const std::size_t g = a.dim();
  std::vector<AveragingOperator> out;
  if (values.empty() || g == 0) return out;

  std::size_t total = 1;
  for (std::size_t i = 0; i < g; ++i) {
    if (total > kMaxDiagonalCandidates / values.size()) {
      throw InvalidInput("diagonal search space exceeds " + std::to_string(kMaxDiagonalCandidates) + " candidates");
    }
    total *= values.size();
  }

  // For θ = diag(d), both averaging equalities reduce to
  // d_i d_j = d_i d_k = d_j d_k on every nonzero constant c(i, j, k).
  struct Support {
    std::size_t i, j, k;
  };
  std::vector<Support> support;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < g; ++k)
        if (!a(i, j, k).is_zero()) support.push_back({i, j, k});

  std::vector<std::size_t> digit(g, 0);
  RatVector d(g, values.front());
  for (std::size_t step = 0; step < total; ++step) {
    bool ok = true;
    for (const Support& s : support) {
      const Rational ij = d[s.i] * d[s.j];
      if (ij != d[s.i] * d[s.k] || ij != d[s.j] * d[s.k]) {
        ok = false;
        break;
      }
    }
    if (ok) out.emplace_back(RatMatrix::diagonal(d));
    // Advance the odometer, last coordinate fastest.
    for (std::size_t pos = g; pos-- > 0;) {
      if (++digit[pos] < values.size()) {
        d[pos] = values[digit[pos]];
        break;
      }
      digit[pos] = 0;
      d[pos] = values.front();
    }
  }
  return out;
}

}  // namespace avla
