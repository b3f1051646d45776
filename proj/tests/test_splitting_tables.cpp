#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "golden_tables.hpp"
#include "malle/error.hpp"
#include "malle/splitting_tables.hpp"

using namespace malle;

namespace {

AbelianGroup G(const char* label) { return AbelianGroup::parse(label); }
CycleType ct(std::vector<int> parts) { return CycleType(std::move(parts)); }
AbelianElement gen(const AbelianGroup& A) { return A.element_of_order(A.exponent()); }
SplittingPattern P(const char* s) { return SplittingPattern::parse(s); }
SplittingPattern F(std::vector<PrimeFactor> f) { return SplittingPattern(std::move(f)); }

}  // namespace

TEST(Pattern, ParseExamples) {
  EXPECT_EQ(P("(1^2 12)"), F({{2, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(P("(1^6)"), F({{6, 1}}));
  EXPECT_EQ(P("(1 1 1)"), F({{1, 1}, {1, 1}, {1, 1}}));
  EXPECT_EQ(P("(1^41)"), F({{4, 1}, {1, 1}}));
  EXPECT_EQ(P("(1^{10} 1^5 2^5)"), F({{10, 1}, {5, 1}, {5, 2}}));
  EXPECT_EQ(P("(2^{10} 1^5)"), F({{10, 2}, {5, 1}}));
  EXPECT_EQ(P(" ( {12} ) "), F({{1, 12}}));
}

TEST(Pattern, ParseErrors) {
  for (const char* bad : {"", "()", "(1^2", "1^2)", "(a)", "(1^0)", "(0)", "(1^)", "(1^{})", "(1^2) x", "(1^{1"})
    EXPECT_THROW(SplittingPattern::parse(bad), ParseError) << bad;
}

TEST(Pattern, DegreeAssertion) {
  EXPECT_NO_THROW(SplittingPattern::parse("(1^2 12)", 5));
  EXPECT_THROW(SplittingPattern::parse("(1^2 12)", 4), ValidationError);
}

TEST(Pattern, Format) {
  EXPECT_EQ(P("(1^2 12)").to_string(), "(1^2 12)");
  EXPECT_EQ(P("(1^{10} 1^5 1^5 1^5)").to_string(), "(1^{10} 1^5 1^5 1^5)");
  EXPECT_EQ(P("(1 1 1)").to_string(), "(111)");
  EXPECT_EQ(P("(1^41)").to_string(), "(1^4 1)");
  EXPECT_EQ(P("(2^2 2^2 1^2)").to_string(), "(1^2 2^2 2^2)");
  EXPECT_EQ(P("({11} 1)").to_string(), "(1{11})");
}

TEST(Pattern, Invariants) {
  const auto p = P("(1^2 12)");
  EXPECT_EQ(p.degree(), 5);
  EXPECT_EQ(p.disc_valuation(), 1);
  EXPECT_FALSE(p.is_unramified());
  EXPECT_EQ(p.inertia_type(), ct({2, 1, 1, 1}));
  EXPECT_TRUE(P("(12)").is_unramified());
}

TEST(Pattern, RoundTripOnGoldenStrings) {
  for (const auto& c : golden::cases()) {
    const auto t = golden::load(c.d, c.A);
    for (const auto& row : t.rows)
      for (const auto* list : {&row.f, &row.fk})
        for (const auto& s : *list) {
          const auto p = SplittingPattern::parse(s);
          EXPECT_EQ(SplittingPattern::parse(p.to_string()), p) << s;
        }
  }
}

TEST(InertiaOrbits, Examples) {
  EXPECT_EQ(inertia_orbits(ct({3}), gen(G("C3")), 3, G("C3")), ct({3, 3, 3}));
  EXPECT_EQ(inertia_orbits(ct({5}), gen(G("C5")), 5, G("C5")), ct({5, 5, 5, 5, 5}));
  EXPECT_EQ(inertia_orbits(ct({1, 1, 1}), G("C2").identity(), 3, G("C2")), CycleType::identity(6));
}

TEST(InertiaOrbits, SumAndCount) {
  for (int d = 1; d <= 5; ++d)
    for (int n = 1; n <= 8; ++n)
      for (const auto& A : abelian_groups_of_order(n))
        for (const auto& g : cycle_types(d))
          for (const auto& h : A.elements()) {
            const auto io = inertia_orbits(g, h, d, A);
            ASSERT_EQ(io.degree(), d * n);
            ASSERT_EQ(io.num_cycles(), pair_cycle_count(g, regular_cycle_type(h)));
          }
}

TEST(Decomposition, Examples) {
  const auto s3 = decomposition_patterns(ct({2, 1}), gen(G("C2")), 3, G("C2"));
  EXPECT_TRUE(s3.count(P("(1^2 1^2 1^2)")));
  const auto s4 = decomposition_patterns(ct({2, 1, 1}), gen(G("C2")), 4, G("C2"));
  EXPECT_TRUE(s4.count(P("(1^2 1^2 1^2 1^2)")));
  EXPECT_TRUE(s4.count(P("(1^2 1^2 2^2)")));
}

TEST(Decomposition, UnramifiedIncludesTotallySplit) {
  const auto s = decomposition_patterns(ct({1, 1, 1}), G("C2").identity(), 3, G("C2"));
  EXPECT_TRUE(s.count(P("(111111)")));
  for (const auto& p : s) EXPECT_TRUE(p.is_unramified());
  // Frobenius (123, 1) gives two orbits of length 3 on 6 points, etc.
  EXPECT_TRUE(s.count(P("(33)")));
  EXPECT_TRUE(s.count(P("(6)")));
}

TEST(Decomposition, PatternsHaveConsistentData) {
  for (int d = 2; d <= 5; ++d)
    for (const auto& A : {G("C2"), G("C3"), G("C4"), G("C2xC2")})
      for (const auto& g : cycle_types(d))
        for (const auto& h : A.elements())
          for (const auto& t : decomposition_triples(g, h, d, A)) {
            ASSERT_EQ(t.f.degree(), d);
            ASSERT_EQ(t.k.degree(), A.order());
            ASSERT_EQ(t.fk.degree(), d * A.order());
            ASSERT_EQ(t.f.inertia_type(), g);
            ASSERT_EQ(t.k.inertia_type(), regular_cycle_type(h));
            ASSERT_EQ(t.fk.inertia_type(), inertia_orbits(g, h, d, A));
          }
}

TEST(DiscValuation, Values) {
  EXPECT_EQ(disc_valuation(ct({2, 2, 1})), 2);
  EXPECT_EQ(disc_valuation_pair(ct({4}), gen(G("C2")), 4, G("C2")), 6);
  EXPECT_EQ(disc_valuation(ct({1, 1, 1})), 0);
}

TEST(RemarkFormula, Values) {
  EXPECT_EQ(remark_formula(P("(1^2 1)"), P("(1^2)")), 3);
  EXPECT_EQ(remark_formula(P("(111)"), P("(11)")), 0);
  EXPECT_EQ(remark_formula(P("(1^3)"), P("(1^5)")), 14);
  EXPECT_EQ(ind(cycle_type(product_embed(representative(ct({3})), representative(ct({5}))))), 14);
}

TEST(RemarkFormula, EqualsPairValuationOnAllDecompositions) {
  for (int d = 1; d <= 5; ++d)
    for (int p : {2, 3, 5, 7}) {
      const auto A = AbelianGroup::from_factors({p});
      for (const auto& g : cycle_types(d))
        for (const auto& h : A.elements())
          for (const auto& t : decomposition_triples(g, h, d, A))
            ASSERT_EQ(remark_formula(t.f, t.k), disc_valuation_pair(g, h, d, A));
    }
}

TEST(GenerateTable, DeltaColumns) {
  auto deltas = [](int d, const char* A) {
    std::vector<long long> out;
    for (const auto& r : generate_table(d, G(A)).rows) out.push_back(r.delta);
    return out;
  };
  EXPECT_EQ(deltas(3, "C2"), (std::vector<long long>{2, 2}));
  EXPECT_EQ(deltas(4, "C2"), (std::vector<long long>{2, 4, 2, 4}));
  EXPECT_EQ(deltas(5, "C5"), (std::vector<long long>{4, 8, 8, 12, 12, 20}));
  EXPECT_EQ(generate_table(3, G("C2")).bound, 3);
  EXPECT_EQ(generate_table(5, G("C5")).bound, 20);
}

TEST(GenerateTable, RejectsNonPrimeCyclic) {
  EXPECT_THROW(generate_table(3, G("C4")), ValidationError);
  EXPECT_THROW(generate_table(3, G("C2xC2")), ValidationError);
  EXPECT_THROW(generate_table(3, G("C1")), ValidationError);
  EXPECT_THROW(generate_table(8, G("C2")), ValidationError);
}

TEST(GenerateTable, RowIdentities) {
  for (int d = 2; d <= 6; ++d)
    for (int p : {2, 3, 5, 7}) {
      const auto A = AbelianGroup::from_factors({p});
      const auto t = generate_table(d, A);
      for (const auto& r : t.rows) {
        EXPECT_EQ(r.delta, static_cast<long long>(p) * r.v_disc_f + d * (p - 1) - r.v_disc_fk);
        for (const auto& f : r.f_splitting) {
          int sum_f = 0;
          for (const auto& x : f.factors()) sum_f += x.f;
          EXPECT_EQ(r.v_disc_f, d - sum_f);
        }
      }
    }
}

TEST(GenerateTable, MatchesGoldenFiles) {
  for (const auto& c : golden::cases()) {
    const auto golden = golden::load(c.d, c.A);
    const auto table = generate_table(c.d, G(c.A));
    EXPECT_EQ(table.bound, golden.bound);
    ASSERT_EQ(table.rows.size(), golden.rows.size()) << c.d << c.A;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const auto& got = table.rows[i];
      const auto& want = golden.rows[i];
      EXPECT_EQ(got.generator.generator_string(), want.generator);
      EXPECT_EQ(got.v_disc_f, want.v_disc_f);
      EXPECT_EQ(got.v_disc_fk, want.v_disc_fk);
      EXPECT_EQ(got.delta, want.delta);
      const std::set<SplittingPattern> fs(got.f_splitting.begin(), got.f_splitting.end());
      const std::set<SplittingPattern> fks(got.fk_splitting.begin(), got.fk_splitting.end());
      for (const auto& s : want.f) EXPECT_TRUE(fs.count(SplittingPattern::parse(s, c.d))) << s;
      for (const auto& s : want.fk) {
        const bool advisory = std::find(want.advisory.begin(), want.advisory.end(), s) != want.advisory.end();
        const auto p = SplittingPattern::parse(s);
        if (advisory)
          EXPECT_FALSE(fks.count(p)) << "advisory cell now enumerated: " << s;
        else
          EXPECT_TRUE(fks.count(p)) << s;
      }
    }
  }
}

TEST(GenerateTable, TsvHasHeaderAndRows) {
  const auto tsv = format_table_tsv(generate_table(3, G("C3")));
  EXPECT_EQ(tsv,
            "splitting_F\tsplitting_FK\tgenerator\tv_disc_F\tv_disc_FK\tdelta\n"
            "(1^2 1)\t(1^6 1^3)\t(12)\t1\t7\t2\n"
            "(1^3)\t(1^3 1^3 1^3), (3^3)\t(123)\t2\t6\t6\n");
  const auto text = format_table_text(generate_table(3, G("C3")));
  EXPECT_NE(text.find("delta <= 6"), std::string::npos);
}
