#include "ends/cayley.hpp"
#include "ends/errors.hpp"
#include "ends/schreier.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace ends;
using namespace ends::testing;

namespace {

// Relator loops close wherever they fit, generators act injectively, and the
// subgroup generators loop at the base.
void expect_closed(const SchreierBall& b, const Presentation& p, const SubgroupSpec& h) {
  const BallGraph& g = b.graph;
  for (int x = 0; x < g.letter_count(); ++x) {
    std::set<Vertex> targets;
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
      const Vertex t = g.target(v, x);
      if (t == kOutside) continue;
      EXPECT_TRUE(targets.insert(t).second) << "letter " << x << " not injective";
      EXPECT_EQ(g.target(t, x ^ 1), v);
    }
  }
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
    for (const Word& r : p.relators()) {
      if (const auto end = g.trace(v, r)) EXPECT_EQ(*end, v);
    }
  }
  for (const Word& w : h.generators) {
    if (const auto end = g.trace(0, w)) EXPECT_EQ(*end, 0);
  }
}

}  // namespace

TEST(EnumerateCosets, WholeGroupIsOnePoint) {
  const Presentation p = f2();
  const SchreierBall b = enumerate_cosets(p, subgroup(p, {"a", "b"}), 3, 0);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_TRUE(b.stable);
  EXPECT_TRUE(b.finite_index);
  for (Vertex t : b.graph.row(0)) EXPECT_EQ(t, 0);
}

TEST(EnumerateCosets, FreeGroupModA) {
  const Presentation p = f2();
  const SchreierBall b = enumerate_cosets(p, subgroup(p, {"a"}), 2, 0);
  EXPECT_TRUE(b.stable);
  ASSERT_EQ(b.size(), 9u);
  std::set<std::string> names;
  for (Vertex v = 0; static_cast<std::size_t>(v) < b.size(); ++v) names.insert(p.format_word(b.graph.normal_form(v)));
  EXPECT_EQ(names, (std::set<std::string>{"1", "b", "B", "ba", "bA", "bb", "Ba", "BA", "BB"}));
  expect_closed(b, p, subgroup(p, {"a"}));
}

TEST(EnumerateCosets, TrivialSubgroupGivesCayleyBall) {
  for (const Presentation& p : {f2(), z(), genus2()}) {
    const SchreierBall s = enumerate_stable(p, SubgroupSpec{}, 3);
    const CayleyBall c = build_ball(p, 3, WordProblemStrategy::dehn());
    EXPECT_EQ(s.graph, c.graph);
  }
}

TEST(EnumerateCosets, SurfaceModA) {
  const Presentation p = genus2();
  const SubgroupSpec h = subgroup(p, {"a"});
  const SchreierBall b = enumerate_stable(p, h, 4);
  EXPECT_TRUE(b.stable);
  EXPECT_FALSE(b.finite_index);
  EXPECT_EQ(b.size(), 2393u);
  expect_closed(b, p, h);
}

TEST(EnumerateCosets, FiniteIndex) {
  const Presentation p = parse_presentation("generators: a b\nrelators:\n  a a a\n  b\n");
  const SchreierBall b = enumerate_cosets(p, SubgroupSpec{}, 5, 0);
  EXPECT_TRUE(b.finite_index);
  EXPECT_TRUE(b.stable);
  EXPECT_EQ(b.size(), 3u);
}

TEST(EnumerateCosets, BudgetAndArguments) {
  const Presentation p = genus2();
  EXPECT_THROW(enumerate_cosets(p, SubgroupSpec{}, 5, 0, 1000), BudgetExceeded);
  EXPECT_THROW(enumerate_cosets(p, SubgroupSpec{}, -1, 0), PreconditionError);
  EXPECT_THROW(enumerate_cosets(p, SubgroupSpec{}, 2, -1), PreconditionError);
  // Radius 4 fits (3193 cosets) but the slack-1 check at depth 5 does not.
  const SchreierBall b = enumerate_cosets(p, SubgroupSpec{}, 4, 0, 3193 * 8);
  EXPECT_FALSE(b.stable);
  EXPECT_EQ(b.size(), 3193u);
  const SchreierBall s = enumerate_stable(p, SubgroupSpec{}, 4, {0, 4, 3193 * 8});
  EXPECT_FALSE(s.stable);
}

TEST(EnumerateCosets, TruncationConsistency) {
  const Presentation g = genus2();
  const Presentation f = f2();
  const std::vector<std::pair<Presentation, SubgroupSpec>> cases{
      {g, subgroup(g, {"a"})}, {g, SubgroupSpec{}}, {f, subgroup(f, {"ab", "bba"})}, {f, subgroup(f, {"aa"})}};
  for (const auto& [p, h] : cases) {
    for (int r = 0; r <= 3; ++r) {
      const SchreierBall big = enumerate_stable(p, h, r + 1);
      const SchreierBall small = enumerate_stable(p, h, r);
      ASSERT_TRUE(big.stable && small.stable);
      EXPECT_EQ(big.graph.truncated(r), small.graph) << r;
    }
  }
}

TEST(QuotientDistance, Examples) {
  const Presentation p = f2();
  const SchreierBall b = enumerate_cosets(p, subgroup(p, {"a"}), 3, 0);
  EXPECT_EQ(quotient_distance(b, 0), 0);
  EXPECT_EQ(quotient_distance(b, *b.graph.trace(0, p.parse_word("bb"))), 2);
  EXPECT_EQ(quotient_distance(b, *b.graph.trace(0, p.parse_word("aabb"))), 2);
  EXPECT_THROW(quotient_distance(b, static_cast<Vertex>(b.size())), OutsideBallError);
  const SchreierBall whole = enumerate_cosets(p, subgroup(p, {"a", "b"}), 2, 0);
  EXPECT_EQ(quotient_distance(whole, 0), 0);
}

TEST(QuotientDistance, LipschitzAndDominatedByWordLength) {
  const Presentation p = genus2();
  const SchreierBall b = enumerate_stable(p, subgroup(p, {"a"}), 4);
  const BallGraph& g = b.graph;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
    bool has_parent = g.dist(v) == 0;
    for (Vertex t : g.row(v)) {
      if (t == kOutside) continue;
      EXPECT_LE(std::abs(g.dist(t) - g.dist(v)), 1);
      has_parent = has_parent || g.dist(t) == g.dist(v) - 1;
    }
    EXPECT_TRUE(has_parent);
  }
  Word w;
  std::function<void(Vertex)> rec = [&](Vertex at) {
    ASSERT_LE(g.dist(at), static_cast<int>(w.size()));
    if (w.size() == 4) return;
    for (int c = 0; c < g.letter_count(); ++c) {
      w.push_back(Letter::from_code(c));
      rec(g.target(at, c));
      w.pop_back();
    }
  };
  rec(0);
}

TEST(CoveringDegree, FreeGroupModAHasItsLoopAtTheBase) {
  const Presentation p = f2();
  const SchreierBall b = enumerate_cosets(p, subgroup(p, {"a"}), 3, 0);
  const CoveringReport r = covering_degree_check(b, 0);
  EXPECT_FALSE(r.passes());
  for (const auto& v : r.violations) {
    EXPECT_EQ(v.dist, 0);
    EXPECT_EQ(v.kind, CoveringViolation::Kind::loop);
  }
  EXPECT_EQ(r.violations.size(), 2u);
  EXPECT_TRUE(covering_degree_check(b, 1).passes());
}

TEST(CoveringDegree, TrivialSubgroupAndWholeGroup) {
  const Presentation g = genus2();
  const SchreierBall b = enumerate_stable(g, SubgroupSpec{}, 3);
  for (int e = 0; e <= 3; ++e) EXPECT_TRUE(covering_degree_check(b, e).passes()) << e;
  const Presentation f = f2();
  const SchreierBall whole = enumerate_cosets(f, subgroup(f, {"a", "b"}), 0, 0);
  const CoveringReport r = covering_degree_check(whole, 0);
  EXPECT_TRUE(r.passes());
  EXPECT_EQ(r.checked, 0u);
}

TEST(CoveringDegree, MultiEdge) {
  const Presentation p = f2();
  const SchreierBall b = enumerate_cosets(p, subgroup(p, {"aB"}), 2, 0);
  const CoveringReport r = covering_degree_check(b, 0);
  ASSERT_FALSE(r.passes());
  EXPECT_EQ(r.violations.front().kind, CoveringViolation::Kind::multi_edge);
  EXPECT_EQ(r.violations.front().dist, 0);
  EXPECT_EQ(r.violations.back().dist, 1);
  EXPECT_FALSE(covering_degree_check(b, 1).passes());
  EXPECT_TRUE(covering_degree_check(b, 2).passes());
}

TEST(DiamCore, TracesSubgroupGenerators) {
  const Presentation p = f2();
  const SchreierBall b = enumerate_cosets(p, subgroup(p, {"abbA"}), 4, 0);
  EXPECT_EQ(estimate_diam_core(b.graph, subgroup(p, {"abbA"})), 2);
  EXPECT_EQ(estimate_diam_core(b.graph, SubgroupSpec{}), 0);
}
