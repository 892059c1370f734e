#include "avla/cochain.hpp"

#include <string>

#include "avla/errors.hpp"

namespace avla {

namespace {

// Dense matrices beyond this many entries are refused.
constexpr std::size_t kMaxDenseEntries = 64'000'000;

struct Entry {
  std::size_t row;
  std::size_t col;
  Rational value;
};

// Nonzero entries of a square action matrix, for sparse stencils.
std::vector<Entry> nonzeros(const RatMatrix& a) {
  std::vector<Entry> out;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero()) out.push_back({r, c, a(r, c)});
  return out;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

void check_degree(std::size_t n) {
  if (n > kMaxCochainDegree) {
    throw InvalidInput("cochain degree " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxCochainDegree));
  }
}

void check_cochain(const Representation& rep, const MultilinearMap& f) {
  if (f.gdim != rep.gdim() || f.mdim != rep.mdim) throw InvalidInput("cochain dimensions do not match representation");
  if (f.coeffs.size() != cochain_dim(f.arity, f.gdim, f.mdim)) throw InvalidInput("cochain coefficient count mismatch");
}

const RatMatrix& theta_m_of(const Representation& rep) {
  if (!rep.theta_m) throw InvalidInput("representation has no theta_M");
  return *rep.theta_m;
}

const AveragingOperator& require_operator(const std::optional<AveragingOperator>& t, const Representation& rep) {
  if (!t) throw InvalidInput("operator required");
  if (t->dim() != rep.gdim()) throw InvalidInput("operator dimension does not match algebra");
  return *t;
}

// Enumerates the Loday-Pirashvili coboundary out of degree n for the given
// bracket and actions. emit(row, col, coeff) receives one contribution to the
// coordinate matrix; rows index degree n+1, columns degree n.
template <class Emit>
void delta_stencil(const LeibnizAlgebra& alg, const std::vector<RatMatrix>& left, const std::vector<RatMatrix>& right,
                   std::size_t m, std::size_t n, Emit&& emit) {
  const std::size_t g = alg.dim();
  std::vector<std::vector<Entry>> lnz, rnz;
  for (const auto& a : left) lnz.push_back(nonzeros(a));
  for (const auto& a : right) rnz.push_back(nonzeros(a));

  const std::size_t out_tuples = ipow(g, n + 1);
  std::vector<std::size_t> sub(n);
  for (std::size_t t_rank = 0; t_rank < out_tuples; ++t_rank) {
    const std::vector<std::size_t> t = tuple_unrank(t_rank, n + 1, g);
    const std::size_t row0 = t_rank * m;

    // sum_{s<n} (-1)^s l(u_s, f(.., û_s, ..))
    for (std::size_t s = 0; s < n; ++s) {
      const Rational sign = (s % 2 == 0) ? Rational(1) : Rational(-1);
      for (std::size_t a = 0, b = 0; a <= n; ++a)
        if (a != s) sub[b++] = t[a];
      const std::size_t col0 = tuple_rank(sub, g) * m;
      for (const Entry& e : lnz[t[s]]) emit(row0 + e.row, col0 + e.col, sign * e.value);
    }

    // (-1)^{n+1} r(f(u_0..u_{n-1}), u_n)
    {
      const Rational sign = ((n + 1) % 2 == 0) ? Rational(1) : Rational(-1);
      for (std::size_t a = 0; a < n; ++a) sub[a] = t[a];
      const std::size_t col0 = tuple_rank(sub, g) * m;
      for (const Entry& e : rnz[t[n]]) emit(row0 + e.row, col0 + e.col, sign * e.value);
    }

    // sum_{s<r} (-1)^{s+1} f(.., û_s, .., [u_s, u_r] in the slot of u_r, ..)
    for (std::size_t s = 0; s < n + 1; ++s) {
      const Rational sign = (s % 2 == 0) ? Rational(-1) : Rational(1);
      for (std::size_t r = s + 1; r < n + 1; ++r) {
        for (std::size_t k = 0; k < g; ++k) {
          const Rational& c = alg(t[s], t[r], k);
          if (c.is_zero()) continue;
          for (std::size_t a = 0, b = 0; a <= n; ++a) {
            if (a == s) continue;
            sub[b++] = (a == r) ? k : t[a];
          }
          const std::size_t col0 = tuple_rank(sub, g) * m;
          const Rational coeff = sign * c;
          for (std::size_t q = 0; q < m; ++q) emit(row0 + q, col0 + q, coeff);
        }
      }
    }
  }
}

// The operator coboundary with θ written into every term:
//   sum (-1)^s [θu_s, f(..)] - sum (-1)^s θ_M [u_s, f(..)]
//   + (-1)^{n+1} [f(..), θu_n] - (-1)^{n+1} θ_M [f(..), u_n]
//   + sum_{s<r} (-1)^{s+1} f(.., [θu_s, u_r] + [u_s, θu_r], ..)
template <class Emit>
void partial_sum_stencil(const Representation& rep, const AveragingOperator& t_op, std::size_t n, Emit&& emit) {
  const LeibnizAlgebra& alg = rep.algebra;
  const std::size_t g = alg.dim(), m = rep.mdim;
  const RatMatrix& tm = theta_m_of(rep);
  const RatMatrix& th = t_op.matrix();

  std::vector<std::vector<Entry>> l_theta, l_plain, r_theta, r_plain;
  for (std::size_t i = 0; i < g; ++i) {
    l_theta.push_back(nonzeros(rep.left_matrix(t_op.image_of_basis(i))));
    l_plain.push_back(nonzeros(tm * rep.left[i]));
    r_theta.push_back(nonzeros(rep.right_matrix(t_op.image_of_basis(i))));
    r_plain.push_back(nonzeros(tm * rep.right[i]));
  }

  const std::size_t out_tuples = ipow(g, n + 1);
  std::vector<std::size_t> sub(n);
  for (std::size_t t_rank = 0; t_rank < out_tuples; ++t_rank) {
    const std::vector<std::size_t> t = tuple_unrank(t_rank, n + 1, g);
    const std::size_t row0 = t_rank * m;

    for (std::size_t s = 0; s < n; ++s) {
      const Rational sign = (s % 2 == 0) ? Rational(1) : Rational(-1);
      for (std::size_t a = 0, b = 0; a <= n; ++a)
        if (a != s) sub[b++] = t[a];
      const std::size_t col0 = tuple_rank(sub, g) * m;
      for (const Entry& e : l_theta[t[s]]) emit(row0 + e.row, col0 + e.col, sign * e.value);
      for (const Entry& e : l_plain[t[s]]) emit(row0 + e.row, col0 + e.col, -sign * e.value);
    }

    {
      const Rational sign = ((n + 1) % 2 == 0) ? Rational(1) : Rational(-1);
      for (std::size_t a = 0; a < n; ++a) sub[a] = t[a];
      const std::size_t col0 = tuple_rank(sub, g) * m;
      for (const Entry& e : r_theta[t[n]]) emit(row0 + e.row, col0 + e.col, sign * e.value);
      for (const Entry& e : r_plain[t[n]]) emit(row0 + e.row, col0 + e.col, -sign * e.value);
    }

    for (std::size_t s = 0; s < n + 1; ++s) {
      const Rational sign = (s % 2 == 0) ? Rational(-1) : Rational(1);
      for (std::size_t r = s + 1; r < n + 1; ++r) {
        for (std::size_t k = 0; k < g; ++k) {
          // [θu_s, u_r]_k + [u_s, θu_r]_k
          Rational c;
          for (std::size_t a = 0; a < g; ++a) {
            if (!th(a, t[s]).is_zero()) c += th(a, t[s]) * alg(a, t[r], k);
            if (!th(a, t[r]).is_zero()) c += th(a, t[r]) * alg(t[s], a, k);
          }
          if (c.is_zero()) continue;
          for (std::size_t a = 0, b = 0; a <= n; ++a) {
            if (a == s) continue;
            sub[b++] = (a == r) ? k : t[a];
          }
          const std::size_t col0 = tuple_rank(sub, g) * m;
          const Rational coeff = sign * c;
          for (std::size_t q = 0; q < m; ++q) emit(row0 + q, col0 + q, coeff);
        }
      }
    }
  }
}

// φ^n: rows and columns both index degree n.
template <class Emit>
void phi_stencil(const RatMatrix& th, const RatMatrix& tm, std::size_t n, std::size_t m, Emit&& emit) {
  const std::size_t g = th.rows();
  struct Factor {
    std::size_t index;
    Rational value;
  };
  // column_support[i] lists (j, θ(j, i)) with θ(j, i) != 0.
  std::vector<std::vector<Factor>> column_support(g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      if (!th(j, i).is_zero()) column_support[i].push_back({j, th(j, i)});
  const std::vector<Entry> tm_nz = nonzeros(tm);

  const std::size_t tuples = ipow(g, n);
  std::vector<std::size_t> j_tuple(n);
  for (std::size_t i_rank = 0; i_rank < tuples; ++i_rank) {
    const std::vector<std::size_t> idx = tuple_unrank(i_rank, n, g);
    const std::size_t row0 = i_rank * m;

    // Enumerate J with weight prod_s θ(j_s, i_s), except at `fixed` where j = i with weight 1.
    auto enumerate = [&](std::size_t fixed, auto&& visit) {
      auto rec = [&](auto&& self, std::size_t pos, const Rational& weight) -> void {
        if (pos == n) {
          visit(tuple_rank(j_tuple, g), weight);
          return;
        }
        if (pos == fixed) {
          j_tuple[pos] = idx[pos];
          self(self, pos + 1, weight);
          return;
        }
        for (const Factor& f : column_support[idx[pos]]) {
          j_tuple[pos] = f.index;
          self(self, pos + 1, weight * f.value);
        }
      };
      rec(rec, 0, Rational(1));
    };

    enumerate(n, [&](std::size_t j_rank, const Rational& w) {
      for (std::size_t q = 0; q < m; ++q) emit(row0 + q, j_rank * m + q, w);
    });
    for (std::size_t k = 0; k < n; ++k) {
      enumerate(k, [&](std::size_t j_rank, const Rational& w) {
        for (const Entry& e : tm_nz) emit(row0 + e.row, j_rank * m + e.col, -(w * e.value));
      });
    }
  }
}

void guard_size(std::size_t rows, std::size_t cols) {
  if (rows != 0 && cols > kMaxDenseEntries / rows) {
    throw InvalidInput("matrix of " + std::to_string(rows) + " x " + std::to_string(cols) + " exceeds the dense size limit");
  }
}

template <class Stencil>
RatMatrix densify(std::size_t rows, std::size_t cols, Stencil&& stencil) {
  guard_size(rows, cols);
  RatMatrix out(rows, cols);
  stencil([&](std::size_t r, std::size_t c, const Rational& v) { out(r, c) += v; });
  return out;
}

template <class Stencil>
RatVector apply_stencil(std::size_t rows, std::span<const Rational> x, Stencil&& stencil) {
  RatVector out(rows);
  stencil([&](std::size_t r, std::size_t c, const Rational& v) {
    if (!x[c].is_zero()) out[r] += v * x[c];
  });
  return out;
}

// Cone differential out of degree n; row/col offsets follow ConeCochain::flatten.
template <class Emit>
void cone_stencil(const Representation& rep, const AveragingOperator& t, InducedMode mode, std::size_t n, Emit&& emit) {
  const std::size_t g = rep.gdim(), m = rep.mdim;
  const RatMatrix& tm = theta_m_of(rep);
  const std::size_t upper = cochain_dim(n + 1, g, m);  // δf block height
  const std::size_t f_width = cochain_dim(n, g, m);

  delta_stencil(rep.algebra, rep.left, rep.right, m, n, emit);
  phi_stencil(t.matrix(), tm, n, m,
              [&](std::size_t r, std::size_t c, const Rational& v) { emit(upper + r, c, -v); });
  if (n == 0) return;
  auto shifted = [&](std::size_t r, std::size_t c, const Rational& v) { emit(upper + r, f_width + c, -v); };
  if (mode == InducedMode::Sum) {
    partial_sum_stencil(rep, t, n - 1, shifted);
  } else {
    const Representation ind = induced_representation(rep, t, InducedMode::Strict);
    delta_stencil(ind.algebra, ind.left, ind.right, m, n - 1, shifted);
  }
}

}  // namespace

std::size_t cochain_dim(std::size_t n, std::size_t gdim, std::size_t mdim) { return mdim * ipow(gdim, n); }

std::size_t cone_dim(std::size_t n, std::size_t gdim, std::size_t mdim) {
  return n == 0 ? mdim : cochain_dim(n, gdim, mdim) + cochain_dim(n - 1, gdim, mdim);
}

std::size_t tuple_rank(std::span<const std::size_t> tuple, std::size_t gdim) {
  std::size_t r = 0;
  for (std::size_t i : tuple) r = r * gdim + i;
  return r;
}

std::vector<std::size_t> tuple_unrank(std::size_t rank, std::size_t arity, std::size_t gdim) {
  std::vector<std::size_t> out(arity);
  for (std::size_t pos = arity; pos-- > 0;) {
    out[pos] = rank % gdim;
    rank /= gdim;
  }
  return out;
}

MultilinearMap MultilinearMap::zero(std::size_t arity, std::size_t gdim, std::size_t mdim) {
  return {arity, gdim, mdim, RatVector(cochain_dim(arity, gdim, mdim))};
}

MultilinearMap MultilinearMap::basis(std::size_t arity, std::size_t gdim, std::size_t mdim, std::size_t index) {
  MultilinearMap f = zero(arity, gdim, mdim);
  if (index >= f.coeffs.size()) throw InvalidInput("basis cochain index out of range");
  f.coeffs[index] = Rational(1);
  return f;
}

MultilinearMap MultilinearMap::from_linear(const RatMatrix& map) {
  MultilinearMap f = zero(1, map.cols(), map.rows());
  for (std::size_t j = 0; j < map.cols(); ++j)
    for (std::size_t p = 0; p < map.rows(); ++p) f.coeffs[j * map.rows() + p] = map(p, j);
  return f;
}

MultilinearMap MultilinearMap::from_coeffs(std::size_t arity, std::size_t gdim, std::size_t mdim, RatVector coeffs) {
  if (coeffs.size() != cochain_dim(arity, gdim, mdim)) throw InvalidInput("cochain coefficient count mismatch");
  return {arity, gdim, mdim, std::move(coeffs)};
}

std::size_t MultilinearMap::index(std::span<const std::size_t> tuple, std::size_t p) const {
  return tuple_rank(tuple, gdim) * mdim + p;
}

RatVector MultilinearMap::eval(std::span<const std::size_t> args) const {
  if (args.size() != arity) throw InvalidInput("eval: expected " + std::to_string(arity) + " arguments");
  for (std::size_t a : args)
    if (a >= gdim) throw InvalidInput("eval: basis index out of range");
  const std::size_t base = tuple_rank(args, gdim) * mdim;
  return RatVector(coeffs.begin() + static_cast<std::ptrdiff_t>(base),
                   coeffs.begin() + static_cast<std::ptrdiff_t>(base + mdim));
}

RatMatrix MultilinearMap::as_linear() const {
  if (arity != 1) throw InvalidInput("as_linear requires a 1-cochain");
  RatMatrix out(mdim, gdim);
  for (std::size_t j = 0; j < gdim; ++j)
    for (std::size_t p = 0; p < mdim; ++p) out(p, j) = coeffs[j * mdim + p];
  return out;
}

MultilinearMap& MultilinearMap::operator+=(const MultilinearMap& o) {
  if (arity != o.arity || gdim != o.gdim || mdim != o.mdim) throw InvalidInput("cochain shape mismatch");
  coeffs = coeffs + o.coeffs;
  return *this;
}

MultilinearMap& MultilinearMap::operator-=(const MultilinearMap& o) {
  if (arity != o.arity || gdim != o.gdim || mdim != o.mdim) throw InvalidInput("cochain shape mismatch");
  coeffs = coeffs - o.coeffs;
  return *this;
}

MultilinearMap operator*(const Rational& s, MultilinearMap a) {
  a.coeffs = s * a.coeffs;
  return a;
}

RatVector ConeCochain::flatten() const {
  RatVector out = f.coeffs;
  if (h) out.insert(out.end(), h->coeffs.begin(), h->coeffs.end());
  return out;
}

ConeCochain ConeCochain::unflatten(std::size_t degree, std::size_t gdim, std::size_t mdim,
                                   std::span<const Rational> flat) {
  if (flat.size() != cone_dim(degree, gdim, mdim)) throw InvalidInput("cone cochain length mismatch");
  const std::size_t fsize = cochain_dim(degree, gdim, mdim);
  ConeCochain x;
  x.f = MultilinearMap::from_coeffs(degree, gdim, mdim, RatVector(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(fsize)));
  if (degree > 0) {
    x.h = MultilinearMap::from_coeffs(degree - 1, gdim, mdim,
                                      RatVector(flat.begin() + static_cast<std::ptrdiff_t>(fsize), flat.end()));
  }
  return x;
}

MultilinearMap delta(const Representation& rep, const MultilinearMap& f) {
  check_cochain(rep, f);
  check_degree(f.arity);
  const std::size_t g = rep.gdim(), m = rep.mdim, n = f.arity;
  RatVector out = apply_stencil(cochain_dim(n + 1, g, m), f.coeffs, [&](auto&& emit) {
    delta_stencil(rep.algebra, rep.left, rep.right, m, n, emit);
  });
  return {n + 1, g, m, std::move(out)};
}

MultilinearMap partial_avg(const Representation& rep, const AveragingOperator& t, const MultilinearMap& f,
                           InducedMode mode) {
  check_cochain(rep, f);
  check_degree(f.arity);
  if (t.dim() != rep.gdim()) throw InvalidInput("operator dimension does not match algebra");
  if (mode == InducedMode::Strict) return delta(induced_representation(rep, t, InducedMode::Strict), f);
  const std::size_t g = rep.gdim(), m = rep.mdim, n = f.arity;
  RatVector out = apply_stencil(cochain_dim(n + 1, g, m), f.coeffs,
                                [&](auto&& emit) { partial_sum_stencil(rep, t, n, emit); });
  return {n + 1, g, m, std::move(out)};
}

MultilinearMap phi(const AveragingOperator& t, const RatMatrix& theta_m, const MultilinearMap& f) {
  if (t.dim() != f.gdim || theta_m.rows() != f.mdim || theta_m.cols() != f.mdim) {
    throw InvalidInput("phi: operator shapes do not match cochain");
  }
  check_degree(f.arity);
  RatVector out = apply_stencil(f.coeffs.size(), f.coeffs,
                                [&](auto&& emit) { phi_stencil(t.matrix(), theta_m, f.arity, f.mdim, emit); });
  return {f.arity, f.gdim, f.mdim, std::move(out)};
}

ConeCochain cone_differential(const Representation& rep, const AveragingOperator& t, InducedMode mode,
                              const ConeCochain& x) {
  check_cochain(rep, x.f);
  const std::size_t n = x.degree(), g = rep.gdim(), m = rep.mdim;
  check_degree(n);
  if ((n == 0) != !x.h.has_value()) throw InvalidInput("cone cochain: h present iff degree >= 1");
  if (x.h) {
    check_cochain(rep, *x.h);
    if (x.h->arity + 1 != n) throw InvalidInput("cone cochain: h must have arity n-1");
  }
  if (t.dim() != g) throw InvalidInput("operator dimension does not match algebra");
  const RatVector flat = x.flatten();
  RatVector out = apply_stencil(cone_dim(n + 1, g, m), flat,
                                [&](auto&& emit) { cone_stencil(rep, t, mode, n, emit); });
  return ConeCochain::unflatten(n + 1, g, m, out);
}

MultilinearMap chain_map_residual(const Representation& rep, const AveragingOperator& t, InducedMode mode,
                                  const MultilinearMap& f) {
  const RatMatrix& tm = theta_m_of(rep);
  return phi(t, tm, delta(rep, f)) - partial_avg(rep, t, phi(t, tm, f), mode);
}

const char* to_string(CochainOperator op) {
  switch (op) {
    case CochainOperator::Delta: return "delta";
    case CochainOperator::PartialAvg: return "partial";
    case CochainOperator::Phi: return "phi";
    case CochainOperator::Cone: return "cone";
    case CochainOperator::ChainMapResidual: return "chain-map-residual";
  }
  return "?";
}

RatMatrix matrix_of(CochainOperator op, std::size_t n, const Representation& rep,
                    const std::optional<AveragingOperator>& t, InducedMode mode) {
  rep.check_shape();
  check_degree(n);
  const std::size_t g = rep.gdim(), m = rep.mdim;
  const std::size_t src = cochain_dim(n, g, m), dst = cochain_dim(n + 1, g, m);
  switch (op) {
    case CochainOperator::Delta:
      return densify(dst, src, [&](auto&& emit) { delta_stencil(rep.algebra, rep.left, rep.right, m, n, emit); });
    case CochainOperator::PartialAvg: {
      const AveragingOperator& th = require_operator(t, rep);
      if (mode == InducedMode::Sum) {
        return densify(dst, src, [&](auto&& emit) { partial_sum_stencil(rep, th, n, emit); });
      }
      const Representation ind = induced_representation(rep, th, InducedMode::Strict);
      return densify(dst, src, [&](auto&& emit) { delta_stencil(ind.algebra, ind.left, ind.right, m, n, emit); });
    }
    case CochainOperator::Phi: {
      const AveragingOperator& th = require_operator(t, rep);
      const RatMatrix& tm = theta_m_of(rep);
      return densify(src, src, [&](auto&& emit) { phi_stencil(th.matrix(), tm, n, m, emit); });
    }
    case CochainOperator::Cone: {
      const AveragingOperator& th = require_operator(t, rep);
      return densify(cone_dim(n + 1, g, m), cone_dim(n, g, m),
                     [&](auto&& emit) { cone_stencil(rep, th, mode, n, emit); });
    }
    case CochainOperator::ChainMapResidual: {
      if (n + 1 > kMaxCochainDegree) throw InvalidInput("chain-map residual needs phi at degree n+1 within the cap");
      return matrix_of(CochainOperator::Phi, n + 1, rep, t, mode) * matrix_of(CochainOperator::Delta, n, rep) -
             matrix_of(CochainOperator::PartialAvg, n, rep, t, mode) * matrix_of(CochainOperator::Phi, n, rep, t, mode);
    }
  }
  throw InvalidInput("unknown operator");
}

}  // namespace avla
