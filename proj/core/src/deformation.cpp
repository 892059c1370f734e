#include "avla/deformation.hpp"

#include <string>

#include "avla/errors.hpp"
#include "avla/linalg.hpp"

namespace avla {

namespace {

RatVector unit(std::size_t dim, std::size_t i) {
  RatVector v(dim);
  v[i] = Rational(1);
  return v;
}

// μ(x, y) for a bilinear cochain with values in the algebra.
RatVector bil(const MultilinearMap& mu, std::span<const Rational> x, std::span<const Rational> y) {
  const std::size_t g = mu.gdim;
  RatVector out(g);
  for (std::size_t a = 0; a < g; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < g; ++b) {
      if (y[b].is_zero()) continue;
      const Rational xy = x[a] * y[b];
      const std::size_t base = (a * g + b) * g;
      for (std::size_t k = 0; k < g; ++k)
        if (!mu.coeffs[base + k].is_zero()) out[k] += xy * mu.coeffs[base + k];
    }
  }
  return out;
}

RatVector eq1_residual(const std::vector<MultilinearMap>& mu, std::size_t n, std::size_t i, std::size_t j,
                       std::size_t k) {
  const std::size_t g = mu.front().gdim;
  const RatVector u = unit(g, i), v = unit(g, j), w = unit(g, k);
  RatVector out(g);
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t q = n - p;
    out = out + bil(mu[p], u, bil(mu[q], v, w));
    out = out - bil(mu[p], bil(mu[q], u, v), w);
    out = out - bil(mu[p], v, bil(mu[q], u, w));
  }
  return out;
}

struct Eq2Sides {
  RatVector left, middle, right;
};

Eq2Sides eq2_sides(const std::vector<MultilinearMap>& mu, const std::vector<RatMatrix>& theta, std::size_t n,
                   std::size_t i, std::size_t j) {
  const std::size_t g = mu.front().gdim;
  const RatVector u = unit(g, i), v = unit(g, j);
  Eq2Sides s{RatVector(g), RatVector(g), RatVector(g)};
  for (std::size_t p = 0; p <= n; ++p) {
    for (std::size_t q = 0; p + q <= n; ++q) {
      const std::size_t r = n - p - q;
      // μ_p(θ_q u, θ_r v)
      s.left = s.left + bil(mu[p], theta[q].column(i), theta[r].column(j));
      // θ_p μ_q(θ_r u, v) and θ_p μ_q(u, θ_r v)
      s.middle = s.middle + theta[p].apply(bil(mu[q], theta[r].column(i), v));
      s.right = s.right + theta[p].apply(bil(mu[q], u, theta[r].column(j)));
    }
  }
  return s;
}

Representation self_rep(const LeibnizAlgebra& a, const AveragingOperator& t) { return self_representation(a, t); }

void check_pair(const LeibnizAlgebra& a, const AveragingOperator& t, const MultilinearMap& mu1,
                const RatMatrix& theta1) {
  const std::size_t g = a.dim();
  if (t.dim() != g) throw InvalidInput("operator dimension does not match algebra");
  if (mu1.arity != 2 || mu1.gdim != g || mu1.mdim != g) throw InvalidInput("mu1 must be a bilinear map on the algebra");
  if (theta1.rows() != g || theta1.cols() != g) throw InvalidInput("theta1 must be dim x dim");
}

}  // namespace

void TruncatedDeformation::check() const {
  if (mu.size() != order + 1 || theta.size() != order + 1) {
    throw InvalidInput("deformation of order " + std::to_string(order) + " needs " + std::to_string(order + 1) +
                       " entries in mu and theta");
  }
  const std::size_t g = dim();
  if (g == 0) throw InvalidInput("deformation has zero dimension");
  for (std::size_t i = 0; i <= order; ++i) {
    if (mu[i].arity != 2 || mu[i].gdim != g || mu[i].mdim != g || mu[i].coeffs.size() != g * g * g) {
      throw InvalidInput("mu[" + std::to_string(i) + "] must be a bilinear map on the algebra");
    }
    if (theta[i].rows() != g || theta[i].cols() != g) {
      throw InvalidInput("theta[" + std::to_string(i) + "] must be dim x dim");
    }
  }
}

TruncatedDeformation TruncatedDeformation::truncated(std::size_t n) const {
  if (n > order) throw InvalidInput("cannot truncate above the deformation order");
  return {n, std::vector<MultilinearMap>(mu.begin(), mu.begin() + static_cast<std::ptrdiff_t>(n + 1)),
          std::vector<RatMatrix>(theta.begin(), theta.begin() + static_cast<std::ptrdiff_t>(n + 1))};
}

TruncatedDeformation TruncatedDeformation::constant(const LeibnizAlgebra& a, const AveragingOperator& t,
                                                    std::size_t order) {
  const std::size_t g = a.dim();
  if (t.dim() != g) throw InvalidInput("operator dimension does not match algebra");
  TruncatedDeformation d;
  d.order = order;
  d.mu.assign(order + 1, MultilinearMap::zero(2, g, g));
  d.theta.assign(order + 1, RatMatrix(g, g));
  d.mu[0] = bracket_cochain(a);
  d.theta[0] = t.matrix();
  return d;
}

void FormalIsomorphism::check() const {
  if (psi.size() != order + 1) {
    throw InvalidInput("isomorphism of order " + std::to_string(order) + " needs " + std::to_string(order + 1) +
                       " entries in psi");
  }
  const std::size_t g = psi.front().rows();
  for (const RatMatrix& m : psi)
    if (m.rows() != g || m.cols() != g) throw InvalidInput("psi entries must be square of equal size");
  if (psi.front() != RatMatrix::identity(g)) throw InvalidInput("psi[0] must be the identity");
}

FormalIsomorphism FormalIsomorphism::identity(std::size_t dim, std::size_t order) {
  FormalIsomorphism p;
  p.order = order;
  p.psi.assign(order + 1, RatMatrix(dim, dim));
  p.psi[0] = RatMatrix::identity(dim);
  return p;
}

MultilinearMap bracket_cochain(const LeibnizAlgebra& a) {
  return MultilinearMap::from_coeffs(2, a.dim(), a.dim(), a.constants());
}

LeibnizAlgebra algebra_of(const MultilinearMap& mu) {
  if (mu.arity != 2 || mu.gdim != mu.mdim) throw InvalidInput("bracket must be a bilinear map on the algebra");
  return LeibnizAlgebra(mu.gdim, mu.coeffs);
}

void check_base(const TruncatedDeformation& d, const LeibnizAlgebra& a, const AveragingOperator& t) {
  d.check();
  if (d.dim() != a.dim()) throw InvalidInput("deformation dimension does not match the algebra");
  if (d.mu[0] != bracket_cochain(a)) throw InvalidInput("mu[0] differs from the base bracket");
  if (d.theta[0] != t.matrix()) throw InvalidInput("theta[0] differs from the base operator");
}

ValidationReport check_deformation_order(const TruncatedDeformation& d) {
  d.check();
  const std::size_t g = d.dim();
  ValidationReport report;
  for (std::size_t n = 0; n <= d.order; ++n) {
    const int order = static_cast<int>(n);
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j)
        for (std::size_t k = 0; k < g; ++k)
          if (RatVector r = eq1_residual(d.mu, n, i, j, k); !is_zero(r)) {
            report.record({{i, j, k}, std::move(r), "eq1", order});
          }
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < g; ++j) {
        const Eq2Sides s = eq2_sides(d.mu, d.theta, n, i, j);
        if (RatVector r = s.left - s.middle; !is_zero(r)) report.record({{i, j}, std::move(r), "eq2:left=middle", order});
        if (RatVector r = s.left - s.right; !is_zero(r)) report.record({{i, j}, std::move(r), "eq2:left=right", order});
      }
    }
  }
  return report;
}

CocycleReport check_cocycle(const LeibnizAlgebra& a, const AveragingOperator& t, const MultilinearMap& mu1,
                            const RatMatrix& theta1, InducedMode mode) {
  check_pair(a, t, mu1, theta1);
  const Representation rep = self_rep(a, t);
  const ConeCochain image = cone_differential(rep, t, mode, {mu1, MultilinearMap::from_linear(theta1)});
  const std::size_t g = a.dim();
  CocycleReport out;
  for (std::size_t rank3 = 0; rank3 < g * g * g; ++rank3) {
    RatVector r = image.f.eval(tuple_unrank(rank3, 3, g));
    if (!is_zero(r)) {
      out.delta_passed = false;
      out.report.record({tuple_unrank(rank3, 3, g), std::move(r), "delta", -1});
    }
  }
  for (std::size_t rank2 = 0; rank2 < g * g; ++rank2) {
    RatVector r = image.h->eval(tuple_unrank(rank2, 2, g));
    if (!is_zero(r)) {
      out.operator_passed = false;
      out.report.record({tuple_unrank(rank2, 2, g), std::move(r), "operator", -1});
    }
  }
  return out;
}

ValidationReport check_equivalence(const TruncatedDeformation& d, const TruncatedDeformation& d_prime,
                                   const FormalIsomorphism& p) {
  d.check();
  d_prime.check();
  p.check();
  if (d.order != d_prime.order || d.order != p.order) throw InvalidInput("deformations and isomorphism differ in order");
  const std::size_t g = d.dim();
  if (d_prime.dim() != g || p.psi.front().rows() != g) throw InvalidInput("deformations and isomorphism differ in dimension");

  ValidationReport report;
  for (std::size_t n = 0; n <= d.order; ++n) {
    const int order = static_cast<int>(n);
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < g; ++j) {
        const RatVector u = unit(g, i), v = unit(g, j);
        RatVector lhs(g), rhs(g);
        for (std::size_t a = 0; a <= n; ++a) lhs = lhs + p.psi[a].apply(bil(d_prime.mu[n - a], u, v));
        for (std::size_t a = 0; a <= n; ++a)
          for (std::size_t b = 0; a + b <= n; ++b)
            rhs = rhs + bil(d.mu[a], p.psi[b].column(i), p.psi[n - a - b].column(j));
        if (RatVector r = lhs - rhs; !is_zero(r)) report.record({{i, j}, std::move(r), "bracket", order});
      }
    }
    RatMatrix diff(g, g);
    for (std::size_t a = 0; a <= n; ++a) {
      diff += p.psi[a] * d_prime.theta[n - a];
      diff -= d.theta[a] * p.psi[n - a];
    }
    for (std::size_t j = 0; j < g; ++j)
      if (RatVector r = diff.column(j); !is_zero(r)) report.record({{j}, std::move(r), "operator", order});
  }
  return report;
}

std::optional<Trivializer> find_trivializer(const LeibnizAlgebra& a, const AveragingOperator& t,
                                            const MultilinearMap& mu1, const RatMatrix& theta1, InducedMode mode) {
  check_pair(a, t, mu1, theta1);
  const std::size_t g = a.dim();
  const Representation rep = self_rep(a, t);
  const RatMatrix d1 = matrix_of(CochainOperator::Cone, 1, rep, t, mode);
  const ConeCochain target{mu1, MultilinearMap::from_linear(theta1)};
  const std::optional<RatVector> x = solve(d1, target.flatten());
  if (!x) return std::nullopt;
  const ConeCochain pre = ConeCochain::unflatten(1, g, g, *x);
  return Trivializer{pre.f.as_linear(), pre.h->coeffs};
}

std::pair<MultilinearMap, RatMatrix> cone_image(const LeibnizAlgebra& a, const AveragingOperator& t,
                                                const Trivializer& x, InducedMode mode) {
  const std::size_t g = a.dim();
  if (x.psi1.rows() != g || x.psi1.cols() != g || x.u.size() != g) throw InvalidInput("trivializer has wrong shape");
  const Representation rep = self_rep(a, t);
  ConeCochain in{MultilinearMap::from_linear(x.psi1), MultilinearMap::from_coeffs(0, g, g, x.u)};
  ConeCochain out = cone_differential(rep, t, mode, in);
  return {std::move(out.f), out.h->as_linear()};
}

const char* to_string(RigidityVerdict::Kind k) {
  switch (k) {
    case RigidityVerdict::Kind::Rigid: return "rigid";
    case RigidityVerdict::Kind::Inconclusive: return "inconclusive";
    case RigidityVerdict::Kind::ComplexInvalid: return "complex-invalid";
  }
  return "?";
}

RigidityVerdict rigidity_report(const LeibnizAlgebra& a, const AveragingOperator& t, InducedMode mode) {
  if (t.dim() != a.dim()) throw InvalidInput("operator dimension does not match algebra");
  ComplexSpec spec;
  spec.kind = ComplexKind::AL;
  spec.mode = mode;
  spec.max_degree = 3;
  spec.rep = self_rep(a, t);
  spec.op = t;
  const CohomologyReport report = cohomology_report(spec);
  RigidityVerdict v;
  for (const DefectEntry& e : report.validity) {
    if (!e.is_zero) {
      v.kind = RigidityVerdict::Kind::ComplexInvalid;
      v.defect = ComplexInvalid{e.degree, e.defect_rank};
      return v;
    }
  }
  v.h2 = *report.degrees[2].betti;
  v.kind = v.h2 == 0 ? RigidityVerdict::Kind::Rigid : RigidityVerdict::Kind::Inconclusive;
  return v;
}

RatMatrix first_order_matrix(const LeibnizAlgebra& a, const AveragingOperator& t, FirstOrderEquation which) {
  const std::size_t g = a.dim();
  if (t.dim() != g) throw InvalidInput("operator dimension does not match algebra");
  const std::size_t mu_coords = g * g * g, cols = mu_coords + g * g;
  const std::size_t rows = which == FirstOrderEquation::Eq1 ? g * g * g * g : g * g * g;
  RatMatrix out(rows, cols);

  TruncatedDeformation d = TruncatedDeformation::constant(a, t, 1);
  for (std::size_t c = 0; c < cols; ++c) {
    d.mu[1] = MultilinearMap::zero(2, g, g);
    d.theta[1] = RatMatrix(g, g);
    if (c < mu_coords) {
      d.mu[1].coeffs[c] = Rational(1);
    } else {
      // 1-cochain layout: coordinate j*g + p is θ₁(p, j).
      const std::size_t idx = c - mu_coords;
      d.theta[1](idx % g, idx / g) = Rational(1);
    }
    if (which == FirstOrderEquation::Eq1) {
      for (std::size_t r3 = 0; r3 < g * g * g; ++r3) {
        const auto tup = tuple_unrank(r3, 3, g);
        const RatVector res = eq1_residual(d.mu, 1, tup[0], tup[1], tup[2]);
        for (std::size_t k = 0; k < g; ++k) out(r3 * g + k, c) = res[k];
      }
      continue;
    }
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < g; ++j) {
        const Eq2Sides s = eq2_sides(d.mu, d.theta, 1, i, j);
        RatVector res;
        switch (which) {
          case FirstOrderEquation::LeftMiddle: res = s.left - s.middle; break;
          case FirstOrderEquation::LeftRight: res = s.left - s.right; break;
          default: res = s.left - s.middle - s.right; break;
        }
        for (std::size_t k = 0; k < g; ++k) out((i * g + j) * g + k, c) = res[k];
      }
    }
  }
  return out;
}

}  // namespace avla
