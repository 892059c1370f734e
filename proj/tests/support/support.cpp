#include "support.hpp"

#include <stdexcept>

namespace avla::testing {

std::string fixture_path(const std::string& name) { return std::string(AVLA_FIXTURE_DIR) + "/" + name; }

AlgebraFixture load_algebra(const std::string& name) { return parse_algebra(read_file(fixture_path(name))); }

AveragingOperator load_operator(const std::string& name) { return parse_operator(read_file(fixture_path(name))); }

TruncatedDeformation load_deformation(const std::string& name) {
  return parse_deformation(read_file(fixture_path(name)));
}

FormalIsomorphism load_isomorphism(const std::string& name) {
  return parse_isomorphism(read_file(fixture_path(name)));
}

RatMatrix diag(std::initializer_list<const char*> entries) {
  RatVector d;
  for (const char* e : entries) d.push_back(q(e));
  return RatMatrix::diagonal(d);
}

oracle::Q to_oracle(const Rational& r) { return oracle::Q(r.str()); }

Rational from_oracle(const oracle::Q& r) { return Rational::parse(r.str()); }

oracle::Algebra to_oracle(const LeibnizAlgebra& a) {
  oracle::Algebra out;
  out.g = static_cast<int>(a.dim());
  for (const Rational& c : a.constants()) out.c.push_back(to_oracle(c));
  return out;
}

oracle::Matrix to_oracle(const RatMatrix& m) {
  oracle::Matrix out;
  out.rows = static_cast<int>(m.rows());
  out.cols = static_cast<int>(m.cols());
  for (const Rational& x : m.entries()) out.a.push_back(to_oracle(x));
  return out;
}

oracle::Module to_oracle(const Representation& rep) {
  const std::size_t g = rep.gdim(), m = rep.mdim;
  oracle::Module out;
  out.g = static_cast<int>(g);
  out.m = static_cast<int>(m);
  out.lc.assign(g * m * m, oracle::Q(0));
  out.rc.assign(m * g * m, oracle::Q(0));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t k = 0; k < m; ++k) {
        out.lc[(i * m + a) * m + k] = to_oracle(rep.left[i](k, a));
        out.rc[(a * g + i) * m + k] = to_oracle(rep.right[i](k, a));
      }
  out.theta_m = rep.theta_m ? to_oracle(*rep.theta_m) : oracle::Matrix::zero(static_cast<int>(m));
  return out;
}

RatMatrix inverse(const RatMatrix& p) {
  const std::size_t n = p.rows();
  RatMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n);
    e[j] = Rational(1);
    const auto x = solve(p, e);
    if (!x || rank(p) != n) throw std::invalid_argument("matrix is singular");
    for (std::size_t i = 0; i < n; ++i) out(i, j) = (*x)[i];
  }
  return out;
}

LeibnizAlgebra transport(const LeibnizAlgebra& a, const RatMatrix& p) {
  const std::size_t g = a.dim();
  const RatMatrix pinv = inverse(p);
  LeibnizAlgebra out = LeibnizAlgebra::zero(g);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      const RatVector v = p.apply(a.bracket(pinv.column(i), pinv.column(j)));
      for (std::size_t k = 0; k < g; ++k) out(i, j, k) = v[k];
    }
  }
  return out;
}

AveragingOperator transport(const AveragingOperator& t, const RatMatrix& p) {
  return AveragingOperator(p * t.matrix() * inverse(p));
}

Rational Generator::small_rational() {
  return Rational(integer(-3, 3), integer(1, 3));
}

std::int64_t Generator::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

RatMatrix Generator::matrix(std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution keep(density);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng_)) m(r, c) = small_rational();
  return m;
}

RatMatrix Generator::invertible(std::size_t n) {
  for (;;) {
    RatMatrix m = matrix(n, n);
    if (rank(m) == n) return m;
  }
}

RatVector Generator::vector(std::size_t n) {
  RatVector v(n);
  for (Rational& x : v) x = small_rational();
  return v;
}

MultilinearMap Generator::cochain(std::size_t arity, std::size_t g, std::size_t m) {
  MultilinearMap f = MultilinearMap::zero(arity, g, m);
  for (Rational& x : f.coeffs) x = small_rational();
  return f;
}

namespace {

LeibnizAlgebra from_triples(std::size_t g, std::initializer_list<std::tuple<int, int, int, int>> triples) {
  LeibnizAlgebra a = LeibnizAlgebra::zero(g);
  for (auto [i, j, k, c] : triples) a(i - 1, j - 1, k - 1) = Rational(c);
  return a;
}

}  // namespace

LeibnizAlgebra lie_sl2() {
  // basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h
  return from_triples(3, {{3, 1, 1, 2}, {1, 3, 1, -2}, {3, 2, 2, -2}, {2, 3, 2, 2}, {1, 2, 3, 1}, {2, 1, 3, -1}});
}

LeibnizAlgebra heisenberg() { return from_triples(3, {{1, 2, 3, 1}, {2, 1, 3, -1}}); }

LeibnizAlgebra leibniz_nonlie() { return from_triples(2, {{1, 2, 2, 1}}); }

LeibnizAlgebra square_zero() { return from_triples(2, {{1, 1, 2, 1}}); }

std::vector<Sample> valid_corpus() {
  std::vector<std::pair<std::string, LeibnizAlgebra>> algebras{
      {"lie2", load_algebra("lie2.json").algebra},
      {"abelian1", load_algebra("abelian1.json").algebra},
      {"abelian2", load_algebra("abelian2.json").algebra},
      {"ex2_2-induced", induced_algebra(load_algebra("ex2_2.json").algebra, load_operator("good_theta.json"),
                                        InducedMode::Strict)},
      {"sl2", lie_sl2()},
      {"heisenberg", heisenberg()},
      {"leibniz-nonlie", leibniz_nonlie()},
      {"square-zero", square_zero()},
  };
  std::vector<Sample> out;
  for (const auto& [name, a] : algebras) {
    if (!validate_leibniz(a, Convention::Left).passed()) throw std::logic_error(name + " is not left Leibniz");
    std::vector<AveragingOperator> ops = search_averaging_diagonal(a, {Rational(0), Rational(1), Rational(2)});
    ops.emplace_back(RatMatrix::scalar(a.dim(), Rational(1, 2)));
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (!validate_averaging(a, ops[i]).passed()) throw std::logic_error(name + ": search returned a bad operator");
      out.push_back({name + "/op" + std::to_string(i), a, ops[i]});
    }
  }
  return out;
}

std::vector<Sample> random_samples(Generator& gen, std::size_t count, std::size_t max_dim) {
  std::vector<Sample> pool;
  for (Sample& s : valid_corpus())
    if (s.algebra.dim() <= max_dim) pool.push_back(std::move(s));
  std::vector<Sample> out;
  for (std::size_t n = 0; n < count; ++n) {
    const Sample& base = pool[static_cast<std::size_t>(gen.integer(0, static_cast<std::int64_t>(pool.size()) - 1))];
    const RatMatrix p = gen.invertible(base.algebra.dim());
    out.push_back({base.name + "~" + std::to_string(n), transport(base.algebra, p), transport(base.op, p)});
  }
  return out;
}

}  // namespace avla::testing
