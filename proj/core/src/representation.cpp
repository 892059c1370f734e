#include "avla/representation.hpp"

#include "avla/errors.hpp"

namespace avla {

namespace {

RatVector unit(std::size_t dim, std::size_t i) {
  RatVector v(dim);
  v[i] = Rational(1);
  return v;
}

const RatMatrix& require_theta_m(const Representation& rep) {
  if (!rep.theta_m) throw InvalidInput("representation has no theta_M");
  return *rep.theta_m;
}

}  // namespace

void Representation::check_shape() const {
  const std::size_t g = gdim(), m = mdim;
  if (left.size() != g || right.size() != g) throw InvalidInput("action tensors must have one matrix per basis element");
  for (const auto& mat : left)
    if (mat.rows() != m || mat.cols() != m) throw InvalidInput("left action matrices must be mdim x mdim");
  for (const auto& mat : right)
    if (mat.rows() != m || mat.cols() != m) throw InvalidInput("right action matrices must be mdim x mdim");
  if (theta_m && (theta_m->rows() != m || theta_m->cols() != m)) throw InvalidInput("theta_M must be mdim x mdim");
}

RatMatrix Representation::left_matrix(std::span<const Rational> u) const {
  if (u.size() != gdim()) throw InvalidInput("algebra element has wrong dimension");
  RatMatrix out(mdim, mdim);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_zero()) out += left[i] * u[i];
  }
  return out;
}

RatMatrix Representation::right_matrix(std::span<const Rational> u) const {
  if (u.size() != gdim()) throw InvalidInput("algebra element has wrong dimension");
  RatMatrix out(mdim, mdim);
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (!u[j].is_zero()) out += right[j] * u[j];
  }
  return out;
}

RatVector Representation::act_left(std::span<const Rational> u, std::span<const Rational> a) const {
  return left_matrix(u).apply(a);
}

RatVector Representation::act_right(std::span<const Rational> a, std::span<const Rational> u) const {
  return right_matrix(u).apply(a);
}

ValidationReport validate_representation(const Representation& rep) {
  rep.check_shape();
  const LeibnizAlgebra& alg = rep.algebra;
  const std::size_t g = rep.gdim(), m = rep.mdim;
  ValidationReport report;
  for (std::size_t i = 0; i < g; ++i) {
    const RatVector u = unit(g, i);
    for (std::size_t j = 0; j < g; ++j) {
      const RatVector v = unit(g, j);
      const RatVector uv = alg.bracket_basis(i, j);
      for (std::size_t p = 0; p < m; ++p) {
        const RatVector a = unit(m, p);
        // l(u, l(v,a)) = l([u,v], a) + l(v, l(u,a))
        RatVector r1 = rep.act_left(u, rep.act_left(v, a)) - rep.act_left(uv, a) -
                       rep.act_left(v, rep.act_left(u, a));
        // l(u, r(a,v)) = r(l(u,a), v) + r(a, [u,v])
        RatVector r2 = rep.act_left(u, rep.act_right(a, v)) - rep.act_right(rep.act_left(u, a), v) -
                       rep.act_right(a, uv);
        // r(a, [u,v]) = r(r(a,u), v) + l(u, r(a,v))
        RatVector r3 = rep.act_right(a, uv) - rep.act_right(rep.act_right(a, u), v) -
                       rep.act_left(u, rep.act_right(a, v));
        if (!is_zero(r1)) report.record({{i, j, p}, std::move(r1), "1", -1});
        if (!is_zero(r2)) report.record({{i, j, p}, std::move(r2), "2", -1});
        if (!is_zero(r3)) report.record({{i, j, p}, std::move(r3), "3", -1});
      }
    }
  }
  return report;
}

ValidationReport validate_averaging_representation(const Representation& rep, const AveragingOperator& t) {
  rep.check_shape();
  const RatMatrix& tm = require_theta_m(rep);
  const std::size_t g = rep.gdim(), m = rep.mdim;
  if (t.dim() != g) throw InvalidInput("operator dimension does not match algebra");
  ValidationReport report;
  for (std::size_t i = 0; i < g; ++i) {
    const RatVector u = unit(g, i);
    const RatVector tu = t.image_of_basis(i);
    for (std::size_t p = 0; p < m; ++p) {
      const RatVector a = unit(m, p);
      const RatVector ta = tm.column(p);
      // l(θu, θ_M a) = θ_M l(θu, a) = θ_M l(u, θ_M a)
      const RatVector l_left = rep.act_left(tu, ta);
      const RatVector l_middle = tm.apply(rep.act_left(tu, a));
      const RatVector l_right = tm.apply(rep.act_left(u, ta));
      // r(θ_M a, θu) = θ_M r(θ_M a, u) = θ_M r(a, θu)
      const RatVector r_left = rep.act_right(ta, tu);
      const RatVector r_middle = tm.apply(rep.act_right(ta, u));
      const RatVector r_right = tm.apply(rep.act_right(a, tu));
      if (RatVector r = l_left - l_middle; !is_zero(r)) report.record({{i, p}, std::move(r), "l:left=middle", -1});
      if (RatVector r = l_left - l_right; !is_zero(r)) report.record({{i, p}, std::move(r), "l:left=right", -1});
      if (RatVector r = r_left - r_middle; !is_zero(r)) report.record({{i, p}, std::move(r), "r:left=middle", -1});
      if (RatVector r = r_left - r_right; !is_zero(r)) report.record({{i, p}, std::move(r), "r:left=right", -1});
    }
  }
  return report;
}

Representation self_representation(const LeibnizAlgebra& a, const std::optional<AveragingOperator>& t) {
  const std::size_t g = a.dim();
  Representation rep;
  rep.algebra = a;
  rep.mdim = g;
  rep.left.assign(g, RatMatrix(g, g));
  rep.right.assign(g, RatMatrix(g, g));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      for (std::size_t k = 0; k < g; ++k) {
        const Rational& c = a(i, j, k);
        rep.left[i](k, j) = c;   // l(e_i, e_j) = [e_i, e_j]
        rep.right[j](k, i) = c;  // r(e_i, e_j) = [e_i, e_j]
      }
    }
  }
  if (t) {
    if (t->dim() != g) throw InvalidInput("operator dimension does not match algebra");
    rep.theta_m = t->matrix();
  }
  return rep;
}

Representation induced_representation(const Representation& rep, const AveragingOperator& t, InducedMode mode) {
  rep.check_shape();
  const std::size_t g = rep.gdim();
  if (t.dim() != g) throw InvalidInput("operator dimension does not match algebra");
  Representation out;
  out.algebra = induced_algebra(rep.algebra, t, mode);
  out.mdim = rep.mdim;
  out.theta_m = rep.theta_m;
  out.left.reserve(g);
  out.right.reserve(g);
  for (std::size_t i = 0; i < g; ++i) {
    const RatVector ti = t.image_of_basis(i);
    RatMatrix l = rep.left_matrix(ti);
    RatMatrix r = rep.right_matrix(ti);
    if (mode == InducedMode::Sum) {
      const RatMatrix& tm = require_theta_m(rep);
      l -= tm * rep.left[i];
      r -= tm * rep.right[i];
    }
    out.left.push_back(std::move(l));
    out.right.push_back(std::move(r));
  }
  return out;
}

ValidationReport check_induced_action_sign(const Representation& rep, const AveragingOperator& t) {
  rep.check_shape();
  const RatMatrix& tm = require_theta_m(rep);
  const std::size_t g = rep.gdim(), m = rep.mdim;
  if (t.dim() != g) throw InvalidInput("operator dimension does not match algebra");
  ValidationReport report;
  for (std::size_t i = 0; i < g; ++i) {
    const RatMatrix l = rep.left_matrix(t.image_of_basis(i)) + tm * rep.left[i];
    const RatMatrix r = rep.right_matrix(t.image_of_basis(i)) + tm * rep.right[i];
    for (std::size_t p = 0; p < m; ++p) {
      if (RatVector res = l.column(p); !is_zero(res)) report.record({{i, p}, std::move(res), "left-action", -1});
      if (RatVector res = r.column(p); !is_zero(res)) report.record({{i, p}, std::move(res), "right-action", -1});
    }
  }
  return report;
}

}  // namespace avla
