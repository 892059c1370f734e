#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

namespace avla {
namespace {

using testing::diag;
using testing::Generator;
using testing::load_algebra;
using testing::q;

// Every diagonal over `values`, in lexicographic order, filtered by the validator.
std::vector<AveragingOperator> brute_force(const LeibnizAlgebra& a, const std::vector<Rational>& values) {
  std::vector<AveragingOperator> out;
  const std::size_t g = a.dim();
  std::vector<std::size_t> idx(g, 0);
  for (;;) {
    RatVector d;
    for (std::size_t i : idx) d.push_back(values[i]);
    AveragingOperator t(RatMatrix::diagonal(d));
    if (validate_averaging(a, t).passed()) out.push_back(t);
    std::size_t pos = g;
    while (pos > 0 && ++idx[pos - 1] == values.size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

TEST(Search, Lie2Count) {
  const auto found = search_averaging_diagonal(load_algebra("lie2.json").algebra,
                                               {Rational(-1), Rational(0), q("1/2"), Rational(1), Rational(2)});
  EXPECT_EQ(found.size(), 9u);
}

TEST(Search, ExampleAlgebra) {
  const auto found =
      search_averaging_diagonal(load_algebra("ex2_2.json").algebra, {Rational(0), q("1/2"), Rational(1)});
  EXPECT_EQ(found.size(), 13u);
  auto contains = [&](const RatMatrix& m) {
    return std::any_of(found.begin(), found.end(), [&](const AveragingOperator& t) { return t.matrix() == m; });
  };
  EXPECT_TRUE(contains(diag({"0", "1", "0", "1"})));
  EXPECT_TRUE(contains(diag({"1/2", "1/2", "1/2", "1/2"})));
  EXPECT_FALSE(contains(diag({"1", "1/2", "1/2", "1"})));
}

TEST(Search, SortsAndDeduplicatesValues) {
  const LeibnizAlgebra a = load_algebra("lie2.json").algebra;
  const auto a1 = search_averaging_diagonal(a, {Rational(1), Rational(0), Rational(1), Rational(0)});
  const auto a2 = search_averaging_diagonal(a, {Rational(0), Rational(1)});
  EXPECT_EQ(a1, a2);
  EXPECT_EQ(a2.front().matrix(), diag({"0", "0"}));
}

TEST(Search, EmptyValuesAndAbelianAlgebras) {
  EXPECT_TRUE(search_averaging_diagonal(load_algebra("lie2.json").algebra, {}).empty());
  const auto all = search_averaging_diagonal(load_algebra("abelian2.json").algebra,
                                             {Rational(-1), Rational(0), q("1/3")});
  EXPECT_EQ(all.size(), 9u);
}

TEST(Search, RefusesHugeSearches) {
  std::vector<Rational> values;
  for (int i = 0; i < 1000; ++i) values.emplace_back(i);
  EXPECT_THROW(search_averaging_diagonal(LeibnizAlgebra::zero(3), values), InvalidInput);
}

TEST(SearchProperty, MatchesBruteForce) {
  Generator gen(91);
  std::vector<LeibnizAlgebra> algebras{load_algebra("ex2_2.json").algebra, load_algebra("lie2.json").algebra,
                                       testing::lie_sl2(), testing::heisenberg(), testing::leibniz_nonlie()};
  for (int trial = 0; trial < 10; ++trial) {
    const RatMatrix p = gen.invertible(2);
    algebras.push_back(testing::transport(testing::square_zero(), p));
  }
  for (const LeibnizAlgebra& a : algebras) {
    std::vector<Rational> values{Rational(0), Rational(1), gen.small_rational()};
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    EXPECT_EQ(search_averaging_diagonal(a, values), brute_force(a, values));
  }
}

}  // namespace
}  // namespace avla
