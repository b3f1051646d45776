#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "malle/error.hpp"
#include "malle/perm_core.hpp"

using namespace malle;

namespace {

CycleType ct(std::vector<int> parts) { return CycleType(std::move(parts)); }

// Cycle count of (i, j) -> (g(i), h(j)) by walking pairs directly.
long long walk_pair_cycles(const Permutation& g, const Permutation& h) {
  std::set<std::pair<int, int>> seen;
  long long cycles = 0;
  for (int i = 1; i <= g.degree(); ++i)
    for (int j = 1; j <= h.degree(); ++j) {
      if (seen.count({i, j})) continue;
      ++cycles;
      std::pair<int, int> p{i, j};
      while (seen.insert(p).second) p = {g(p.first), h(p.second)};
    }
  return cycles;
}

}  // namespace

TEST(CycleTypeOf, IdentityOnFourPoints) { EXPECT_EQ(cycle_type(Permutation::identity(4)), ct({1, 1, 1, 1})); }

TEST(CycleTypeOf, FourCycle) {
  EXPECT_EQ(cycle_type(Permutation::from_cycles(4, {{1, 2, 3, 4}})), ct({4}));
}

TEST(CycleTypeOf, DoubleTranspositionInS5) {
  EXPECT_EQ(cycle_type(Permutation::from_cycles(5, {{1, 2}, {3, 4}})), ct({2, 2, 1}));
}

TEST(Ind, Values) {
  EXPECT_EQ(ind(ct({1, 1, 1})), 0);
  EXPECT_EQ(ind(ct({2, 1})), 1);
  EXPECT_EQ(ind(ct({5})), 4);
}

TEST(Ind, ZeroExactlyOnIdentity) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& c : cycle_types(n)) EXPECT_EQ(ind(c) == 0, c.is_identity()) << c.to_string();
}

TEST(PairCycleCount, Values) {
  EXPECT_EQ(pair_cycle_count(ct({3}), ct({3})), 3);
  EXPECT_EQ(pair_cycle_count(ct({2, 1, 1, 1}), ct({5})), 4);
  for (const auto& h : cycle_types(4)) EXPECT_EQ(pair_cycle_count(ct({1, 1, 1}), h), 3 * h.num_cycles());
}

TEST(PairCycleCount, Symmetric) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      for (const auto& g : cycle_types(m))
        for (const auto& h : cycle_types(n)) EXPECT_EQ(pair_cycle_count(g, h), pair_cycle_count(h, g));
}

TEST(PairIndex, Values) {
  EXPECT_EQ(pair_index(ct({2, 1}), ct({2})), 3);
  EXPECT_EQ(pair_index(ct({1, 1}), ct({1, 1, 1})), 0);
  EXPECT_EQ(pair_index(ct({4}), ct({2})), 6);
}

TEST(PairIndex, TrivialSecondFactorScalesIndex) {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      for (const auto& g : cycle_types(m)) EXPECT_EQ(pair_index(g, CycleType::identity(n)), n * ind(g));
}

TEST(ProductEmbed, IdentityGoesToIdentity) {
  EXPECT_TRUE(product_embed(Permutation::identity(3), Permutation::identity(4)).is_identity());
}

TEST(ProductEmbed, TranspositionPair) {
  const auto s = Permutation::from_cycles(2, {{1, 2}});
  const auto p = product_embed(s, s);
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(cycle_type(p), ct({2, 2}));
  // (1,1)->(2,2), (1,2)->(2,1): points 1->4, 2->3.
  EXPECT_EQ(p(1), 4);
  EXPECT_EQ(p(2), 3);
}

TEST(ProductEmbed, PointNumbering) {
  const auto g = Permutation::from_cycles(3, {{1, 2, 3}});
  const auto h = Permutation::from_cycles(2, {{1, 2}});
  const auto p = product_embed(g, h);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 2; ++j) EXPECT_EQ(p((i - 1) * 2 + j), (g(i) - 1) * 2 + h(j));
}

TEST(ProductEmbed, DegreeCap) {
  EXPECT_THROW(product_embed(Permutation::identity(10), Permutation::identity(10), 50), ValidationError);
}

// ind of the explicit product permutation equals the gcd formula, for every
// pair of class representatives with m <= 5, n <= 8.
TEST(ProductEmbed, MatchesGcdFormulaExhaustively) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 8; ++n)
      for (const auto& g : cycle_types(m))
        for (const auto& h : cycle_types(n)) {
          const auto gr = representative(g);
          const auto hr = representative(h);
          const auto p = product_embed(gr, hr);
          ASSERT_EQ(ind(cycle_type(p)), pair_index(g, h)) << g.to_string() << " x " << h.to_string();
          ASSERT_EQ(walk_pair_cycles(gr, hr), pair_cycle_count(g, h));
        }
}

TEST(ProductEmbed, RandomPermutationsOfS4AndS3) {
  const auto a = all_permutations(4);
  const auto b = all_permutations(3);
  for (const auto& g : a)
    for (const auto& h : b)
      ASSERT_EQ(ind(cycle_type(product_embed(g, h))), pair_index(cycle_type(g), cycle_type(h)));
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({1, 1, 2}), ValidationError);
  EXPECT_THROW(Permutation({0, 1}), ValidationError);
  EXPECT_THROW(Permutation(std::vector<int>{}), ValidationError);
  EXPECT_THROW(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), ValidationError);
}

TEST(Permutation, Arithmetic) {
  const auto a = Permutation::from_cycles(3, {{1, 2}});
  const auto b = Permutation::from_cycles(3, {{2, 3}});
  // (a*b)(i) = a(b(i)): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  EXPECT_EQ(a * b, Permutation({2, 3, 1}));
  const auto c = Permutation::from_cycles(5, {{1, 2, 3, 4, 5}});
  EXPECT_TRUE(c.pow(5).is_identity());
  EXPECT_EQ(c.pow(-1), c.inverse());
  EXPECT_EQ(c * c.inverse(), Permutation::identity(5));
}

TEST(Permutation, CycleString) {
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
  EXPECT_EQ(Permutation::from_cycles(5, {{1, 2, 3}, {4, 5}}).to_cycle_string(), "(123)(45)");
}

TEST(CycleType, ParseForms) {
  EXPECT_EQ(CycleType::parse("2.1"), ct({2, 1}));
  EXPECT_EQ(CycleType::parse("1,2"), ct({2, 1}));
  EXPECT_EQ(CycleType::parse("(2,2,1)"), ct({2, 2, 1}));
  EXPECT_THROW(CycleType::parse(""), ParseError);
  EXPECT_THROW(CycleType::parse("2.x"), ParseError);
  EXPECT_THROW(CycleType::parse("2.0"), Error);
}

TEST(CycleType, CanonicalDescendingOrder) {
  const auto c = ct({1, 3, 2});
  EXPECT_EQ(std::vector<int>(c.parts().begin(), c.parts().end()), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(c.degree(), 6);
  EXPECT_EQ(c.order(), 6);
  EXPECT_EQ(c.to_string(), "3.2.1");
}

TEST(CycleType, OrderingOfS5) {
  std::vector<std::string> got;
  for (const auto& c : cycle_types(5)) got.push_back(c.generator_string());
  EXPECT_EQ(got, (std::vector<std::string>{"()", "(12)", "(12)(34)", "(123)", "(123)(45)", "(1234)", "(12345)"}));
}

TEST(CycleType, PartitionCounts) {
  const std::vector<std::size_t> p{1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(cycle_types(n).size(), p[static_cast<std::size_t>(n - 1)]);
}

TEST(Enumeration, PermutationsAndSubgroups) {
  EXPECT_EQ(all_permutations(4).size(), 24u);
  const auto s3 = generated_subgroup(3, {Permutation::from_cycles(3, {{1, 2}}), Permutation::from_cycles(3, {{1, 2, 3}})});
  EXPECT_EQ(s3.size(), 6u);
  const auto v4 = generated_subgroup(4, {Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                                         Permutation::from_cycles(4, {{1, 3}, {2, 4}})});
  EXPECT_EQ(v4.size(), 4u);
}

TEST(Representative, HasRequestedType) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& c : cycle_types(n)) EXPECT_EQ(cycle_type(representative(c)), c);
}
