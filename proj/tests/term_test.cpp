#include <gtest/gtest.h>

#include <random>

#include "pclie/metabelian.hpp"
#include "pclie/term.hpp"
#include "support/random_terms.hpp"

namespace pclie {
namespace {

const FieldTag Q = FieldTag::rationals();

LiePoly poly(const ContextPtr& ctx, std::initializer_list<std::pair<Word, long>> terms) {
  LiePoly p(ctx);
  for (const auto& [w, c] : terms) p.add_term(w, Scalar::from_integer(c, Q));
  return p;
}

TEST(Mdeg, Examples) {
  const auto t = parse_expr("[a1,[a2,a1]]");
  EXPECT_EQ(mdeg(t, 3), (MultiDegree{2, 1, 0}));
  EXPECT_EQ(mdeg(Word{2}, 2), (MultiDegree{0, 1}));
  EXPECT_EQ(mdeg(Word{2, 1, 3, 3}, 3), (MultiDegree{1, 1, 2}));
  EXPECT_EQ((MultiDegree{1, 1, 2}).length(), 4);
}

TEST(Mdeg, AdditiveUnderBracket) {
  std::mt19937 rng(3);
  for (int k = 0; k < 500; ++k) {
    const auto u = testing::random_monomial(rng, 4, 1 + k % 4);
    const auto v = testing::random_monomial(rng, 4, 1 + k % 3);
    ASSERT_EQ(mdeg(LieTerm::bracket(u, v), 4), mdeg(u, 4) + mdeg(v, 4));
  }
}

TEST(Supp, Examples) {
  auto ctx = make_context(Graph(3), Variety::metabelian(), Q);
  EXPECT_EQ(supp(poly(ctx, {{Word{3, 1}, 1}, {Word{2, 1}, 1}})), (VertexSet{1, 2, 3}));
  EXPECT_TRUE(supp(LiePoly(ctx)).empty());
  EXPECT_EQ(supp(poly(ctx, {{Word{2}, 1}})), VertexSet{2});
  EXPECT_EQ(supp(parse_expr("[a1,a3] + [a1,a2]")), (VertexSet{1, 2, 3}));
}

TEST(GradedParts, Examples) {
  auto ctx = make_context(Graph(2), Variety::nilpotent(3), Q);
  const LiePoly p = poly(ctx, {{Word{1}, 1}, {Word{2, 1}, 1}});
  EXPECT_EQ(graded_part(p, 1), poly(ctx, {{Word{1}, 1}}));
  EXPECT_EQ(lower_part(p, 2), p);
  EXPECT_TRUE(upper_part(p, 2).is_zero());
  EXPECT_TRUE(graded_part(LiePoly(ctx), 3).is_zero());
}

TEST(MultihomogeneousSplit, Examples) {
  auto ctx = make_context(Graph(3), Variety::metabelian(), Q);
  const LiePoly p = poly(ctx, {{Word{2, 1}, 1}, {Word{3, 1}, 2}});
  const auto parts = multihomogeneous_split(p);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, (MultiDegree{1, 1, 0}));
  EXPECT_EQ(parts[0].second, poly(ctx, {{Word{2, 1}, 1}}));
  EXPECT_EQ(parts[1].first, (MultiDegree{1, 0, 1}));
  EXPECT_EQ(parts[1].second, poly(ctx, {{Word{3, 1}, 2}}));
  EXPECT_EQ(multihomogeneous_split(parts[0].second).size(), 1u);
  EXPECT_TRUE(multihomogeneous_split(LiePoly(ctx)).empty());
}

TEST(GradedParts, SumAndDisjointOnRandomNormalForms) {
  std::mt19937 rng(5);
  MetabelianEngine eng(Graph(3, {{1, 2}}));
  for (int k = 0; k < 200; ++k) {
    const LiePoly p = eng.nf(testing::random_term(rng, 3, 5, 4));
    ASSERT_EQ(supp(p).empty(), p.is_zero());
    LiePoly acc(p.context_ptr());
    std::size_t count = 0;
    for (int i = 1; i <= 5; ++i) {
      const LiePoly w = graded_part(p, i);
      count += w.terms().size();
      acc += w;
    }
    ASSERT_EQ(acc, p);
    ASSERT_EQ(count, p.terms().size());
    LiePoly sum(p.context_ptr());
    for (const auto& [d, part] : multihomogeneous_split(p)) {
      for (const auto& [w, c] : part.terms()) ASSERT_EQ(mdeg(w, 3), d);
      sum += part;
    }
    ASSERT_EQ(sum, p);
    ASSERT_EQ(lower_part(p, 2) + upper_part(p, 2), p);
  }
}

TEST(Parser, Examples) {
  EXPECT_EQ(parse_expr("[a1,a2]").to_string(), "[a1,a2]");
  const auto t = parse_expr("[a1,a2,a3]");
  ASSERT_EQ(t.kind(), LieTerm::Kind::bracket);
  EXPECT_EQ(t.left().to_string(), "[a1,a2]");
  EXPECT_EQ(t.right().to_string(), "a3");
  const auto s = parse_expr("1/2*a1 - [a2,[a1,a3]]");
  ASSERT_EQ(s.kind(), LieTerm::Kind::sum);
  ASSERT_EQ(s.part_count(), 2u);
  EXPECT_EQ(s.weight(0), mpq_class(1, 2));
  EXPECT_EQ(s.weight(1), mpq_class(-1));
  EXPECT_EQ(s.part(1).right().to_string(), "[a1,a3]");
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_expr("[a1]"), InputError);
  EXPECT_THROW(parse_expr("[a1,a2"), InputError);
  EXPECT_THROW(parse_expr("b1"), InputError);
  EXPECT_THROW(parse_expr("a0"), InputError);
  EXPECT_THROW(parse_expr("a4", 3), InputError);
  EXPECT_THROW(parse_expr("2 a1"), InputError);
  EXPECT_THROW(parse_expr("1/0*a1"), InputError);
  EXPECT_THROW(parse_expr(""), InputError);
  EXPECT_THROW(parse_expr("a1 +"), InputError);
  try {
    parse_expr("[a1,a2)");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("position 6"), std::string::npos) << e.what();
  }
}

TEST(Variety, ParseAndPrint) {
  EXPECT_EQ(Variety::parse("metabelian"), Variety::metabelian());
  EXPECT_EQ(Variety::parse("metabelian:4"), Variety::metabelian(4));
  EXPECT_EQ(Variety::parse("nilpotent:3"), Variety::nilpotent(3));
  EXPECT_EQ(Variety::parse("free:2").to_string(), "free:2");
  EXPECT_THROW(Variety::parse("nilpotent"), InputError);
  EXPECT_THROW(Variety::parse("nilpotent:1"), InputError);
  EXPECT_THROW(Variety::parse("free:x"), InputError);
  EXPECT_THROW(Variety::parse("solvable:2"), InputError);
}

TEST(LiePoly, PrintingAndContext) {
  auto ctx = make_context(Graph(3), Variety::metabelian(), Q);
  EXPECT_EQ(poly(ctx, {{Word{3, 1}, 2}, {Word{2, 1}, -1}}).to_string(), "-1*[a2,a1] + 2*[a3,a1]");
  EXPECT_EQ(poly(ctx, {{Word{3, 1}, -2}, {Word{2, 1}, 1}}).to_string(), "1*[a2,a1] - 2*[a3,a1]");
  EXPECT_EQ(LiePoly(ctx).to_string(), "0");
  auto other = make_context(Graph(3), Variety::nilpotent(2), Q);
  EXPECT_THROW(poly(ctx, {{Word{1}, 1}}) + poly(other, {{Word{1}, 1}}), InputError);
}

TEST(LiePoly, Proportional) {
  auto ctx = make_context(Graph(3), Variety::metabelian(), Q);
  const LiePoly f = poly(ctx, {{Word{1}, 1}, {Word{3, 1}, 2}});
  EXPECT_TRUE(proportional(f, Scalar::from_integer(-3, Q) * f));
  EXPECT_FALSE(proportional(f, poly(ctx, {{Word{1}, 1}, {Word{3, 1}, 3}})));
  EXPECT_FALSE(proportional(f, LiePoly(ctx)));
  EXPECT_TRUE(proportional(LiePoly(ctx), LiePoly(ctx)));
}

}  // namespace
}  // namespace pclie
