#include <gtest/gtest.h>

#include "support.hpp"

namespace avla {
namespace {

using testing::fixture_path;
using testing::Generator;
using testing::to_oracle;

struct Case {
  std::string name;
  LeibnizAlgebra algebra;
  AveragingOperator op;
  oracle::Algebra oa;
  oracle::Matrix otheta;
};

// Fixture pairs are read independently by both sides.
std::vector<Case> fixture_cases() {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"lie2.json", "lie2_id.json"},       {"lie2.json", "lie2_zero.json"},  {"lie2.json", "lie2_half.json"},
      {"lie2.json", "lie2_diag01.json"},   {"ex2_2.json", "good_theta.json"}, {"ex2_2.json", "ex2_4_theta.json"},
      {"ex2_2.json", "id_op4.json"},       {"abelian1.json", "id_op.json"},   {"abelian2.json", "abelian2_op.json"},
  };
  std::vector<Case> out;
  for (const auto& [alg, op] : pairs) {
    out.push_back({alg + "+" + op, testing::load_algebra(alg).algebra, testing::load_operator(op),
                   oracle::load_algebra(fixture_path(alg)), oracle::load_matrix(fixture_path(op))});
  }
  return out;
}

std::vector<Case> random_cases(std::uint64_t seed, std::size_t count) {
  Generator gen(seed);
  std::vector<Case> out;
  for (const testing::Sample& s : testing::random_samples(gen, count, 3)) {
    out.push_back({s.name, s.algebra, s.op, to_oracle(s.algebra), to_oracle(s.op.matrix())});
  }
  // Arbitrary structure constants and operators, mostly invalid.
  for (std::size_t n = 0; n < count; ++n) {
    const auto g = static_cast<std::size_t>(gen.integer(1, 3));
    std::vector<Rational> c(g * g * g);
    for (Rational& x : c) x = gen.integer(0, 2) == 0 ? gen.small_rational() : Rational();
    const LeibnizAlgebra a(g, c);
    const AveragingOperator t(gen.matrix(g, g));
    out.push_back({"arbitrary" + std::to_string(n), a, t, to_oracle(a), to_oracle(t.matrix())});
  }
  return out;
}

std::vector<Case> all_cases() {
  std::vector<Case> out = fixture_cases();
  for (Case& c : random_cases(111, 8)) out.push_back(std::move(c));
  return out;
}

RatVector flatten(const oracle::Cochain& f) {
  RatVector out;
  for (const auto& [t, v] : f.values)
    for (const oracle::Q& x : v) out.push_back(testing::from_oracle(x));
  return out;
}

oracle::Mode oracle_mode(InducedMode m) { return m == InducedMode::Strict ? oracle::Mode::Strict : oracle::Mode::Sum; }

TEST(OracleAgreement, CochainOperatorsPointwise) {
  for (const Case& c : all_cases()) {
    const Representation rep = self_representation(c.algebra, c.op);
    const oracle::Module mod = oracle::self_module(c.oa, c.otheta);
    const int g = static_cast<int>(c.algebra.dim());
    const std::size_t top = g <= 2 ? 3 : 2;
    for (std::size_t n = 0; n <= top; ++n) {
      const RatMatrix d = matrix_of(CochainOperator::Delta, n, rep);
      const RatMatrix p = matrix_of(CochainOperator::Phi, n, rep, c.op);
      const RatMatrix ps = matrix_of(CochainOperator::PartialAvg, n, rep, c.op, InducedMode::Strict);
      const RatMatrix pm = matrix_of(CochainOperator::PartialAvg, n, rep, c.op, InducedMode::Sum);
      const auto basis = oracle::basis(static_cast<int>(n), g, g);
      ASSERT_EQ(basis.size(), d.cols());
      for (std::size_t col = 0; col < basis.size(); ++col) {
        EXPECT_EQ(d.column(col), flatten(oracle::delta(c.oa, mod, basis[col]))) << c.name << " n=" << n;
        EXPECT_EQ(p.column(col), flatten(oracle::phi(c.otheta, mod.theta_m, basis[col]))) << c.name;
        EXPECT_EQ(ps.column(col), flatten(oracle::partial(c.oa, mod, c.otheta, basis[col], oracle::Mode::Strict)))
            << c.name;
        EXPECT_EQ(pm.column(col), flatten(oracle::partial(c.oa, mod, c.otheta, basis[col], oracle::Mode::Sum)))
            << c.name;
      }
    }
  }
}

TEST(OracleAgreement, Verdicts) {
  for (const Case& c : all_cases()) {
    const Representation rep = self_representation(c.algebra, c.op);
    const oracle::Module mod = oracle::self_module(c.oa, c.otheta);
    EXPECT_EQ(validate_leibniz(c.algebra, Convention::Left).passed(), oracle::leibniz(c.oa, true)) << c.name;
    EXPECT_EQ(validate_leibniz(c.algebra, Convention::Right).passed(), oracle::leibniz(c.oa, false)) << c.name;
    EXPECT_EQ(validate_averaging(c.algebra, c.op).passed(), oracle::averaging(c.oa, c.otheta)) << c.name;
    EXPECT_EQ(validate_representation(rep).passed(), oracle::module_valid(c.oa, mod)) << c.name;
    EXPECT_EQ(validate_averaging_representation(rep, c.op).passed(), oracle::module_averaging(c.oa, mod, c.otheta))
        << c.name;
    EXPECT_EQ(check_induced_action_sign(rep, c.op).passed(), oracle::action_sign(mod, c.otheta)) << c.name;
    for (InducedMode mode : {InducedMode::Strict, InducedMode::Sum}) {
      const LeibnizAlgebra ind = induced_algebra(c.algebra, c.op, mode);
      EXPECT_EQ(validate_averaging(ind, c.op).passed(), oracle::induced_averaging(c.oa, c.otheta, oracle_mode(mode)))
          << c.name;
      EXPECT_EQ(check_morphism(c.algebra, ind, c.op, c.op, c.op.matrix()).report.passed(),
                oracle::theta_morphism(c.oa, c.otheta, oracle_mode(mode)))
          << c.name;
      const Representation ind_rep = induced_representation(rep, c.op, mode);
      const oracle::Module ind_mod = oracle::induced(mod, c.otheta, oracle_mode(mode));
      EXPECT_EQ(validate_representation(ind_rep).passed(),
                oracle::module_valid(oracle::induced(c.oa, c.otheta, oracle_mode(mode)), ind_mod))
          << c.name;
      for (std::size_t n = 0; n <= 2; ++n) {
        const RatMatrix residual = matrix_of(CochainOperator::ChainMapResidual, n, rep, c.op, mode);
        EXPECT_EQ(residual.is_zero(),
                  oracle::chain_map_holds(c.oa, mod, c.otheta, oracle_mode(mode), static_cast<int>(n)))
            << c.name << " n=" << n;
        const RatMatrix sq = matrix_of(CochainOperator::PartialAvg, n + 1, rep, c.op, mode) *
                             matrix_of(CochainOperator::PartialAvg, n, rep, c.op, mode);
        EXPECT_EQ(sq.is_zero(),
                  oracle::partial_squares_zero(c.oa, mod, c.otheta, oracle_mode(mode), static_cast<int>(n)))
            << c.name << " n=" << n;
      }
    }
  }
}

TEST(OracleAgreement, BettiNumbers) {
  std::vector<Case> cases = fixture_cases();
  for (Case& c : random_cases(112, 4)) cases.push_back(std::move(c));
  for (const Case& c : cases) {
    const Representation rep = self_representation(c.algebra, c.op);
    const oracle::Module mod = oracle::self_module(c.oa, c.otheta);
    const std::size_t top = c.algebra.dim() <= 2 ? 3 : 2;
    const CohomologyReport la = cohomology_report({ComplexKind::LA, InducedMode::Strict, top, rep, std::nullopt});
    for (const DegreeRow& row : la.degrees) {
      if (!row.betti) continue;
      EXPECT_EQ(static_cast<int>(*row.betti), oracle::betti_la(c.oa, mod, static_cast<int>(row.degree))) << c.name;
    }
    for (InducedMode mode : {InducedMode::Strict, InducedMode::Sum}) {
      const CohomologyReport al = cohomology_report({ComplexKind::AL, mode, top, rep, c.op});
      for (const DegreeRow& row : al.degrees) {
        if (!row.betti) continue;
        EXPECT_EQ(static_cast<int>(*row.betti),
                  oracle::betti_al(c.oa, mod, c.otheta, oracle_mode(mode), static_cast<int>(row.degree)))
            << c.name << " n=" << row.degree;
      }
    }
  }
}

TEST(OracleAgreement, PinnedDimensionsFromTheOracle) {
  const oracle::Algebra ab1 = oracle::load_algebra(fixture_path("abelian1.json"));
  const oracle::Matrix zero = oracle::load_matrix(fixture_path("zero_op.json"));
  const oracle::Matrix id = oracle::load_matrix(fixture_path("id_op.json"));
  const oracle::Module m0 = oracle::self_module(ab1, zero);
  std::vector<int> dims;
  for (int n = 0; n <= 3; ++n) dims.push_back(oracle::betti_al(ab1, m0, zero, oracle::Mode::Strict, n));
  EXPECT_EQ(dims, (std::vector<int>{0, 1, 2, 2}));
  EXPECT_EQ(oracle::betti_al(ab1, oracle::self_module(ab1, id), id, oracle::Mode::Strict, 2), 1);
  const oracle::Algebra ab2 = oracle::load_algebra(fixture_path("abelian2.json"));
  EXPECT_EQ(oracle::betti_la(ab2, oracle::self_module(ab2, oracle::Matrix::identity(2)), 2), 8);
}

}  // namespace
}  // namespace avla
