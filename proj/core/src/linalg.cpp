#include "avla/linalg.hpp"

#include "avla/errors.hpp"

namespace avla {

EchelonForm rref(RatMatrix a) {
  EchelonForm out;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a(sel, col).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      auto r1 = a.row(sel), r2 = a.row(pivot_row);
      for (std::size_t c = col; c < cols; ++c) swap(r1[c], r2[c]);
    }
    auto prow = a.row(pivot_row);
    if (const Rational inv = prow[col].reciprocal(); inv != Rational(1)) {
      for (std::size_t c = col; c < cols; ++c) {
        if (!prow[c].is_zero()) prow[c] *= inv;
      }
    }
    // Nonzero columns of the pivot row, so each elimination touches only those.
    std::vector<std::size_t> support;
    for (std::size_t c = col; c < cols; ++c) {
      if (!prow[c].is_zero()) support.push_back(c);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      auto target = a.row(r);
      if (target[col].is_zero()) continue;
      const Rational factor = target[col];
      for (std::size_t c : support) target[c] -= factor * prow[c];
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& a) {
  const EchelonForm ef = rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
      const Rational& entry = ef.reduced(i, free);
      if (!entry.is_zero()) v[ef.pivots[i]] = -entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw InvalidInput("solve: right-hand side length != rows");
  const std::size_t cols = a.cols();
  RatMatrix aug(a.rows(), cols + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = a(r, c);
    aug(r, cols) = b[r];
  }
  const EchelonForm ef = rref(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == cols) return std::nullopt;

  RatVector x(cols);
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) x[ef.pivots[i]] = ef.reduced(i, cols);
  return x;
}

}  // namespace avla
