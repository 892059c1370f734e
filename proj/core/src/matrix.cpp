#include "avla/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "avla/errors.hpp"

namespace avla {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

RatMatrix RatMatrix::scalar(std::size_t n, const Rational& value) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

RatMatrix RatMatrix::diagonal(std::span<const Rational> entries) {
  RatMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::size_t RatMatrix::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Rational& x) { return !x.is_zero(); }));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVector RatMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw InvalidInput("matrix-vector shape mismatch");
  RatVector y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero()) y[r] += a * x[c];
    }
  }
  return y;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  }
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  }
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  // Operands are typically very sparse; skip zeros on both sides.
  std::vector<std::vector<std::size_t>> b_nonzeros(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      if (!b(k, j).is_zero()) b_nonzeros[k].push_back(j);
    }
  }
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j : b_nonzeros[k]) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

RatMatrix RatMatrix::vstack(const RatMatrix& top, const RatMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw InvalidInput("vstack column mismatch");
  RatMatrix m(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
  return m;
}

RatMatrix RatMatrix::hstack(const RatMatrix& left, const RatMatrix& right) {
  if (left.rows_ != right.rows_) throw InvalidInput("hstack row mismatch");
  RatMatrix m(left.rows_, left.cols_ + right.cols_);
  for (std::size_t r = 0; r < left.rows_; ++r) {
    for (std::size_t c = 0; c < left.cols_; ++c) m(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, left.cols_ + c) = right(r, c);
  }
  return m;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << to_string(row(r));
  }
  os << ']';
  return os.str();
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InvalidInput("vector sum length mismatch");
  RatVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw InvalidInput("vector difference length mismatch");
  RatVector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

RatVector operator*(const Rational& s, const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ']';
  return os.str();
}

}  // namespace avla
