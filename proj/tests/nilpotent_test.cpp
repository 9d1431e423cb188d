#include <gtest/gtest.h>

#include <random>

#include "pclie/metabelian.hpp"
#include "pclie/nilpotent.hpp"
#include "support/oracles.hpp"
#include "support/poly_terms.hpp"
#include "support/random_terms.hpp"

namespace pclie {
namespace {

const FieldTag Q = FieldTag::rationals();

std::vector<std::size_t> degrees(const StructureTable& t) { return t.dim_report().by_degree; }

// [[u,v],w] + [[v,w],u] + [[w,u],v] on every basis triple; [u,u] = 0 and
// [u,v] = -[v,u] on every pair.
void expect_lie_identities(const StructureTable& t) {
  const std::size_t d = t.dim();
  const FieldTag f = t.field();
  for (std::size_t i = 0; i < d; ++i) {
    const Vector u = unit_vector(d, i, f);
    ASSERT_TRUE(is_zero(t.bracket(u, u)));
    for (std::size_t j = 0; j < d; ++j) {
      const Vector v = unit_vector(d, j, f);
      const Vector uv = t.bracket(u, v);
      Vector s = t.bracket(v, u);
      axpy(s, Scalar::one(f), uv);
      ASSERT_TRUE(is_zero(s));
      for (std::size_t k = j + 1; k < d; ++k) {
        const Vector w = unit_vector(d, k, f);
        Vector jac = t.bracket(uv, w);
        axpy(jac, Scalar::one(f), t.bracket(t.bracket(v, w), u));
        axpy(jac, Scalar::one(f), t.bracket(t.bracket(w, u), v));
        ASSERT_TRUE(is_zero(jac)) << i << " " << j << " " << k;
      }
    }
  }
}

TEST(BuildStructure, Examples) {
  const auto e2 = build_structure(Graph(2), 3);
  EXPECT_EQ(degrees(e2), (std::vector<std::size_t>{2, 1, 2}));
  std::vector<std::string> words;
  for (const auto& b : e2.basis()) words.push_back(b.word.to_string());
  EXPECT_EQ(words, (std::vector<std::string>{"a1", "a2", "[a2,a1]", "[a2,a1,a1]", "[a2,a1,a2]"}));
  EXPECT_EQ(degrees(build_structure(Graph(3, {{1, 2}, {2, 3}}), 2)), (std::vector<std::size_t>{3, 1}));
  for (int m = 2; m <= 4; ++m) EXPECT_EQ(build_structure(Graph::complete(4), m).dim(), 4u);
  EXPECT_THROW(build_structure(Graph(2), 1), InputError);
}

TEST(BuildStructure, DumpIsStable) {
  EXPECT_EQ(build_structure(Graph(2), 3).dump(),
            "# nilpotent:3 over Q\n"
            "b 1 a1\nb 2 a2\nb 3 [a2,a1]\nb 4 [a2,a1,a1]\nb 5 [a2,a1,a2]\n"
            "1 2 3 -1\n1 3 4 -1\n2 3 5 -1\n");
}

TEST(BuildStructure, CapExceeded) {
  BuildOptions opts;
  opts.dimension_cap = 10;
  EXPECT_THROW(build_structure(Graph(3), 3, Q, opts), CapExceeded);
  EXPECT_NO_THROW(build_structure(Graph(2), 3, Q, opts));
}

TEST(NilpotentNf, Examples) {
  const auto e2 = build_structure(Graph(2), 2);
  EXPECT_TRUE(nf_nilpotent(e2, parse_expr("[a1,a2,a1]")).is_zero());
  EXPECT_EQ(nf_nilpotent(e2, parse_expr("[a1,a2]")).to_string(), "-1*[a2,a1]");
  const auto k2 = build_structure(Graph(2, {{1, 2}}), 3);
  EXPECT_TRUE(nf_nilpotent(k2, parse_expr("[a1,a2]")).is_zero());
  EXPECT_THROW(nf_nilpotent(e2, parse_expr("a3")), InputError);
}

TEST(NilpotentBracket, Examples) {
  const auto t = build_structure(Graph(3, {{1, 3}}), 3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      EXPECT_EQ(bracket_nilpotent(t, t.generator(i), t.generator(j)),
                -bracket_nilpotent(t, t.generator(j), t.generator(i)));
    }
  }
  const auto e2 = build_structure(Graph(2), 2);
  const LiePoly x = nf_nilpotent(e2, parse_expr("[a2,a1]"));
  EXPECT_TRUE(bracket_nilpotent(e2, x, x).is_zero());
  EXPECT_TRUE(bracket_nilpotent(e2, x, e2.generator(1)).is_zero());
  const auto other = build_structure(Graph(2), 3);
  EXPECT_THROW(bracket_nilpotent(e2, x, other.generator(1)), InputError);
}

TEST(DimReport, Examples) {
  EXPECT_EQ(degrees(build_structure(Graph(3), 2)), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(build_structure(Graph(3), 2).dim(), 6u);
  EXPECT_EQ(degrees(build_structure(Graph::complete(3), 5)), (std::vector<std::size_t>{3, 0, 0, 0, 0}));
  EXPECT_EQ(format_dims(build_structure(Graph(3, {{1, 2}, {2, 3}}), 2).dim_report()), "deg1: 3, deg2: 1, total 4");
}

TEST(TruncatedFree, AliasOfBuildStructure) {
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const Graph g = Graph::from_edge_mask(3, mask);
    EXPECT_TRUE(truncated_free(g, 3).same_structure(build_structure(g, 3)));
  }
  EXPECT_EQ(degrees(truncated_free(Graph(2), 2)), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(degrees(truncated_free(Graph(2, {{1, 2}}), 4)), (std::vector<std::size_t>{2, 0, 0, 0}));
  EXPECT_EQ(truncated_free(Graph(2), 2).context().variety.to_string(), "free:2");
}

TEST(BuildStructure, WittDimensions) {
  for (int n = 1; n <= 3; ++n) {
    const auto t = build_structure(Graph(n), 6);
    for (int d = 1; d <= 6; ++d) {
      ASSERT_EQ(static_cast<long long>(t.dim_report().by_degree[static_cast<std::size_t>(d - 1)]), testing::witt(n, d))
          << n << " " << d;
      ASSERT_EQ(static_cast<long long>(witt_dimension(n, d)), testing::witt(n, d));
    }
  }
}

TEST(BuildStructure, LieIdentitiesOnTables) {
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    expect_lie_identities(build_structure(Graph::from_edge_mask(3, mask), 4));
    expect_lie_identities(build_structure(Graph::from_edge_mask(3, mask), 3, FieldTag::prime(2)));
  }
  expect_lie_identities(build_structure(Graph(4, {{1, 2}, {3, 4}}), 3));
  expect_lie_identities(MetabelianEngine(Graph(3)).truncated_table(4));
}

TEST(BuildStructure, MultidegreeGrading) {
  const auto t = build_structure(Graph(3, {{1, 2}}), 4);
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      for (const auto& [k, c] : t.bracket_basis(i, j)) {
        ASSERT_EQ(t.basis()[k].mdeg, t.basis()[i].mdeg + t.basis()[j].mdeg);
      }
    }
  }
}

TEST(BuildStructure, Monotone) {
  for (std::uint64_t mask = 0; mask < 64; mask += 5) {
    const Graph g = Graph::from_edge_mask(4, mask);
    const auto big = build_structure(g, 4).dim_report();
    const auto small = build_structure(g, 3).dim_report();
    for (std::size_t d = 0; d < 3; ++d) ASSERT_EQ(big.by_degree[d], small.by_degree[d]);
  }
}

TEST(BuildStructure, MatchesMetabelianUpToDegreeThree) {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = Graph::from_edge_mask(4, mask);
    const auto nil = build_structure(g, 3).dim_report();
    for (int d = 1; d <= 3; ++d) {
      for (const auto& md : multidegrees_of_length(4, d)) {
        const auto it = nil.by_multidegree.find(md);
        const std::size_t nd = it == nil.by_multidegree.end() ? 0 : it->second;
        ASSERT_EQ(nd, metabelian_basis(g, md).size()) << format_graph(g) << md.to_string();
      }
    }
  }
}

// Table products against the graph-relation kernel in the free associative algebra.
TEST(BuildStructure, AgreesWithKernelOracle) {
  std::mt19937 rng(41);
  for (const Graph& g : {Graph(3), Graph(3, {{1, 2}}), Graph(3, {{1, 3}, {2, 3}}), Graph(4, {{1, 2}, {3, 4}})}) {
    const int m = 4;
    const auto t = build_structure(g, m);
    testing::QuotientKernelOracle oracle(g, Q, false);
    for (int k = 0; k < 60; ++k) {
      const LieTerm term = testing::random_term(rng, g.vertex_count(), 5, 3);
      const LiePoly p = nf_nilpotent(t, term);
      ASSERT_EQ(nf_nilpotent(t, testing::as_term(p)), p);
      AssocPoly diff = testing::expand_term(term, Q);
      for (const auto& [u, c] : testing::expand_poly(p)) free_lie::accumulate(diff, u, -c);
      ASSERT_TRUE(oracle.vanishes(diff, m)) << format_graph(g) << term.to_string();
    }
    for (int d = 2; d <= m; ++d) {
      for (const auto& md : multidegrees_of_length(g.vertex_count(), d)) {
        const auto& by = t.dim_report().by_multidegree;
        const auto it = by.find(md);
        ASSERT_EQ(it == by.end() ? 0 : it->second, oracle.dim(md));
      }
    }
  }
}

}  // namespace
}  // namespace pclie
