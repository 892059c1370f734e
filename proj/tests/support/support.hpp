#pragma once

// Shared helpers for the unit and acceptance tests: fixture loading, bridges
// into the reference oracle (through decimal strings only), and hand-rolled
// generators for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "avla/audit.hpp"
#include "avla/errors.hpp"
#include "avla/io.hpp"
#include "avla/linalg.hpp"
#include "avla/search.hpp"
#include "oracle.hpp"

namespace avla::testing {

std::string fixture_path(const std::string& name);
AlgebraFixture load_algebra(const std::string& name);
AveragingOperator load_operator(const std::string& name);
TruncatedDeformation load_deformation(const std::string& name);
FormalIsomorphism load_isomorphism(const std::string& name);

inline Rational q(const char* text) { return Rational::parse(text); }
RatMatrix diag(std::initializer_list<const char*> entries);

oracle::Q to_oracle(const Rational& r);
Rational from_oracle(const oracle::Q& r);
oracle::Algebra to_oracle(const LeibnizAlgebra& a);
oracle::Matrix to_oracle(const RatMatrix& m);
oracle::Module to_oracle(const Representation& rep);

/// Inverse of an invertible square matrix.
RatMatrix inverse(const RatMatrix& p);
/// Structure constants of p(A): [x, y]' = p[p^{-1}x, p^{-1}y].
LeibnizAlgebra transport(const LeibnizAlgebra& a, const RatMatrix& p);
AveragingOperator transport(const AveragingOperator& t, const RatMatrix& p);

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  /// Numerator in [-3, 3], denominator in {1, 2, 3}.
  Rational small_rational();
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  RatMatrix matrix(std::size_t rows, std::size_t cols, double density = 0.6);
  RatMatrix invertible(std::size_t n);
  RatVector vector(std::size_t n);
  MultilinearMap cochain(std::size_t arity, std::size_t g, std::size_t m);

 private:
  std::mt19937_64 rng_;
};

struct Sample {
  std::string name;
  LeibnizAlgebra algebra;
  AveragingOperator op;
};

/// Named algebras used throughout the tests, not all of them valid.
LeibnizAlgebra lie_sl2();
LeibnizAlgebra heisenberg();
LeibnizAlgebra leibniz_nonlie();  // [e1, e2] = e2, left Leibniz, not antisymmetric
LeibnizAlgebra square_zero();     // [e1, e1] = e2

/// Left Leibniz algebras paired with averaging operators: the fixtures,
/// the named algebras above, and for each the diagonal operators with
/// entries in {0, 1, 2} plus 1/2 id. Every pair passes both validators.
std::vector<Sample> valid_corpus();

/// Random isomorphic copies of corpus entries with dimension at most `max_dim`.
std::vector<Sample> random_samples(Generator& gen, std::size_t count, std::size_t max_dim);

}  // namespace avla::testing
