#include "avla/algebra.hpp"

#include "avla/errors.hpp"
#include "avla/linalg.hpp"

namespace avla {

const char* to_string(Convention c) { return c == Convention::Left ? "left" : "right"; }
const char* to_string(InducedMode m) { return m == InducedMode::Strict ? "strict" : "sum"; }

LeibnizAlgebra::LeibnizAlgebra(std::size_t dim, std::vector<Rational> constants)
    : dim_(dim), c_(std::move(constants)) {
  if (c_.size() != dim * dim * dim) throw InvalidInput("structure constants must have dim^3 entries");
}

RatVector LeibnizAlgebra::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
  if (u.size() != dim_ || v.size() != dim_) throw InvalidInput("bracket argument has wrong dimension");
  RatVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const Rational uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = (*this)(i, j, k);
        if (!c.is_zero()) out[k] += uv * c;
      }
    }
  }
  return out;
}

RatVector LeibnizAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  RatVector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = (*this)(i, j, k);
  return out;
}

AveragingOperator::AveragingOperator(RatMatrix matrix) : m_(std::move(matrix)) {
  if (!m_.is_square()) throw InvalidInput("averaging operator must be square");
}

void ValidationReport::record(Witness w) {
  ++failure_count;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

void ValidationReport::merge(const ValidationReport& other) {
  failure_count += other.failure_count;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() >= kMaxWitnesses) break;
    witnesses.push_back(w);
  }
}

namespace {

RatVector unit(std::size_t dim, std::size_t i) {
  RatVector v(dim);
  v[i] = Rational(1);
  return v;
}

}  // namespace

ValidationReport validate_leibniz(const LeibnizAlgebra& a, Convention conv) {
  const std::size_t g = a.dim();
  ValidationReport report;
  for (std::size_t i = 0; i < g; ++i) {
    const RatVector u = unit(g, i);
    for (std::size_t j = 0; j < g; ++j) {
      const RatVector v = unit(g, j);
      for (std::size_t k = 0; k < g; ++k) {
        const RatVector w = unit(g, k);
        RatVector residual;
        if (conv == Convention::Left) {
          residual = a.bracket(u, a.bracket_basis(j, k)) - a.bracket(a.bracket_basis(i, j), w) -
                     a.bracket(v, a.bracket_basis(i, k));
        } else {
          residual = a.bracket(a.bracket_basis(i, j), w) - a.bracket(a.bracket_basis(i, k), v) -
                     a.bracket(u, a.bracket_basis(j, k));
        }
        if (!is_zero(residual)) {
          report.record({{i, j, k}, std::move(residual), to_string(conv), -1});
        }
      }
    }
  }
  return report;
}

ValidationReport validate_averaging(const LeibnizAlgebra& a, const AveragingOperator& t) {
  const std::size_t g = a.dim();
  if (t.dim() != g) throw InvalidInput("operator dimension does not match algebra");
  ValidationReport report;
  for (std::size_t i = 0; i < g; ++i) {
    const RatVector tu = t.image_of_basis(i);
    const RatVector u = unit(g, i);
    for (std::size_t j = 0; j < g; ++j) {
      const RatVector tv = t.image_of_basis(j);
      const RatVector v = unit(g, j);
      const RatVector left = a.bracket(tu, tv);
      const RatVector middle = t.apply(a.bracket(tu, v));
      const RatVector right = t.apply(a.bracket(u, tv));
      if (RatVector r = left - middle; !is_zero(r)) report.record({{i, j}, std::move(r), "left=middle", -1});
      if (RatVector r = left - right; !is_zero(r)) report.record({{i, j}, std::move(r), "left=right", -1});
    }
  }
  return report;
}

LeibnizAlgebra induced_algebra(const LeibnizAlgebra& a, const AveragingOperator& t, InducedMode mode) {
  const std::size_t g = a.dim();
  if (t.dim() != g) throw InvalidInput("operator dimension does not match algebra");
  LeibnizAlgebra out = LeibnizAlgebra::zero(g);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      RatVector value = a.bracket(t.image_of_basis(i), unit(g, j));
      if (mode == InducedMode::Sum) value = value + a.bracket(unit(g, i), t.image_of_basis(j));
      for (std::size_t k = 0; k < g; ++k) out(i, j, k) = value[k];
    }
  }
  return out;
}

MorphismReport check_morphism(const LeibnizAlgebra& a, const LeibnizAlgebra& a_prime,
                              const AveragingOperator& t, const AveragingOperator& t_prime,
                              const RatMatrix& p) {
  const std::size_t g = a.dim(), h = a_prime.dim();
  if (p.rows() != h || p.cols() != g) throw InvalidInput("morphism matrix must be dim(A') x dim(A)");
  if (t.dim() != g || t_prime.dim() != h) throw InvalidInput("operator dimension mismatch");

  MorphismReport out;
  for (std::size_t i = 0; i < g; ++i) {
    const RatVector pi = p.column(i);
    for (std::size_t j = 0; j < g; ++j) {
      RatVector residual = p.apply(a.bracket_basis(i, j)) - a_prime.bracket(pi, p.column(j));
      if (!is_zero(residual)) out.report.record({{i, j}, std::move(residual), "bracket", -1});
    }
  }
  const RatMatrix commutator = t_prime.matrix() * p - p * t.matrix();
  for (std::size_t j = 0; j < g; ++j) {
    RatVector residual = commutator.column(j);
    if (!is_zero(residual)) out.report.record({{j}, std::move(residual), "operator", -1});
  }
  out.isomorphism = g == h && rank(p) == g;
  return out;
}

ValidationReport check_lift_symmetry(const LeibnizAlgebra& a, const AveragingOperator& t) {
  const std::size_t g = a.dim();
  if (t.dim() != g) throw InvalidInput("operator dimension does not match algebra");
  ValidationReport report;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      RatVector residual = a.bracket(t.image_of_basis(i), unit(g, j)) - a.bracket(unit(g, i), t.image_of_basis(j));
      if (!is_zero(residual)) report.record({{i, j}, std::move(residual), "lift-symmetry", -1});
    }
  }
  return report;
}

}  // namespace avla
