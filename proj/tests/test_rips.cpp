#include "ends/errors.hpp"
#include "ends/oracle.hpp"
#include "ends/rips.hpp"
#include "ends/schreier.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace ends;
using namespace ends::testing;

namespace {

Presentation quotient(const char* file) { return load_instance(data_path(file)).group; }

// Positive words in the two fresh generators, read back off the relators.
std::vector<Word> fresh_blocks(const RipsOutput& out) {
  const int n = out.q_presentation.generator_count();
  std::vector<Word> blocks;
  for (const Word& r : out.g_presentation.relators()) {
    Word b;
    for (Letter x : r) {
      if (x.generator() >= n) b.push_back(x.is_inverse() ? x.inverse() : x);
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

TEST(DeBruijn, EveryWindowOnce) {
  for (int n = 1; n <= 12; ++n) {
    const std::vector<int> s = de_bruijn(n);
    ASSERT_EQ(s.size(), std::size_t{1} << n);
    std::set<unsigned> windows;
    for (std::size_t i = 0; i < s.size(); ++i) {
      unsigned v = 0;
      for (int k = 0; k < n; ++k) v = (v << 1) | static_cast<unsigned>(s[(i + static_cast<std::size_t>(k)) % s.size()]);
      windows.insert(v);
    }
    EXPECT_EQ(windows.size(), s.size()) << n;
  }
  EXPECT_EQ(de_bruijn(3), (std::vector<int>{0, 0, 0, 1, 0, 1, 1, 1}));
  EXPECT_THROW(de_bruijn(0), PreconditionError);
  EXPECT_THROW(de_bruijn(25), PreconditionError);
}

TEST(FreshNames, AvoidExistingGenerators) {
  EXPECT_EQ(fresh_generator_names(quotient("q_b2.grp")), (std::pair<std::string, std::string>{"a", "c"}));
  EXPECT_EQ(fresh_generator_names(f2()), (std::pair<std::string, std::string>{"c", "d"}));
  const Presentation long_names = parse_presentation("generators: h1 g2\nrelators:\n  h1 h1\n");
  EXPECT_EQ(fresh_generator_names(long_names), (std::pair<std::string, std::string>{"h2", "h3"}));
}

TEST(RipsConstruct, TrivialQuotient) {
  const Presentation q = quotient("q_trivial.grp");
  const RipsOutput out = rips_construct(q, 8);
  EXPECT_EQ(out.g_presentation.generator_count(), 3);
  EXPECT_EQ(out.g_presentation.relators().size(), 5u);
  EXPECT_GE(out.block_length, 8);
  const RipsReport r = verify_rips(out);
  EXPECT_TRUE(r.small_cancellation);
  EXPECT_LT(6 * r.max_piece_len, r.min_relator_len);
  EXPECT_TRUE(r.quotient_recovered);
  EXPECT_TRUE(r.conjugation_relators_ok);
  EXPECT_EQ(r.conjugation_relators_found, 4);
  EXPECT_TRUE(r.passes());
}

TEST(RipsConstruct, RelatorAndGeneratorCounts) {
  for (const char* file : {"q_trivial.grp", "q_b2.grp", "q_b3.grp", "q_z.grp"}) {
    const Presentation q = quotient(file);
    const RipsOutput out = rips_construct(q, 4, {4096, 3});
    const std::size_t m = q.relators().size();
    const auto n = static_cast<std::size_t>(q.generator_count());
    EXPECT_EQ(out.g_presentation.relators().size(), m + 4 * n) << file;
    EXPECT_EQ(static_cast<std::size_t>(out.g_presentation.generator_count()), n + 2) << file;
    EXPECT_EQ(out.h_generators.generators.size(), 2u);
    EXPECT_TRUE(verify_rips(out).passes()) << file;
    // Quotient relators carry one block, conjugation relators a block plus the conjugated letter.
    const auto blocks = fresh_blocks(out);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      EXPECT_EQ(static_cast<int>(blocks[j].size()), out.block_length + (j < m ? 0 : 1)) << file;
    }
    EXPECT_EQ(std::set<Word>(blocks.begin(), blocks.end()).size(), blocks.size()) << file;
  }
}

TEST(RipsConstruct, RecoversTheQuotientRelators) {
  const Presentation q = quotient("q_b2.grp");
  const RipsReport r = verify_rips(rips_construct(q, 6));
  std::set<Word> got(r.recovered_relators.begin(), r.recovered_relators.end());
  EXPECT_TRUE(got.contains(q.parse_word("bb")));
  EXPECT_TRUE(got.contains(q.parse_word("x")));
  EXPECT_EQ(got.size(), 2u);
}

TEST(VerifyRips, CatchesDamage) {
  const Presentation q = quotient("q_b2.grp");
  const RipsOutput good = rips_construct(q, 6);

  // Cut a fresh block down to one letter: pieces now dominate.
  RipsOutput short_block = good;
  std::vector<Word> rels = good.g_presentation.relators();
  const int n = q.generator_count();
  Word& first = rels.front();
  const auto fresh_start = std::find_if(first.begin(), first.end(), [&](Letter x) { return x.generator() >= n; });
  first.erase(fresh_start + 1, std::find_if(fresh_start + 1, first.end(), [&](Letter x) { return x.generator() < n; }));
  short_block.g_presentation = Presentation(good.g_presentation.generator_names(), rels);
  EXPECT_FALSE(verify_rips(short_block).small_cancellation);
  EXPECT_FALSE(verify_rips(short_block).passes());

  // Drop one conjugation relator.
  RipsOutput missing = good;
  rels = good.g_presentation.relators();
  rels.pop_back();
  missing.g_presentation = Presentation(good.g_presentation.generator_names(), rels);
  const RipsReport m = verify_rips(missing);
  EXPECT_FALSE(m.conjugation_relators_ok);
  EXPECT_TRUE(m.quotient_recovered);

  // A quotient relator that G does not carry.
  RipsOutput wrong_q = good;
  wrong_q.q_presentation = quotient("q_b3.grp");
  EXPECT_FALSE(verify_rips(wrong_q).quotient_recovered);
}

TEST(RipsConstruct, DeterministicAndSeeded) {
  const Presentation q = quotient("q_z.grp");
  const RipsOutput a = rips_construct(q, 6, {4096, 17});
  const RipsOutput b = rips_construct(q, 6, {4096, 17});
  EXPECT_EQ(a.g_presentation, b.g_presentation);
  EXPECT_EQ(to_text(a.instance()), to_text(b.instance()));
  const RipsOutput c = rips_construct(q, 6, {4096, 18});
  EXPECT_TRUE(verify_rips(c).passes());
}

TEST(RipsConstruct, Preconditions) {
  const Presentation q = quotient("q_b2.grp");
  EXPECT_THROW(rips_construct(q, 0), PreconditionError);
  EXPECT_THROW(rips_construct(q, 2, {3, 0}), PreconditionError);
}

// G/H is Q: its Schreier graph restricted to Q's generators is Q's Cayley
// graph, and the fresh generators act trivially on the cosets.
TEST(RipsConstruct, SchreierGraphIsTheQuotientCayleyGraph) {
  for (const char* file : {"q_trivial.grp", "q_b2.grp", "q_b3.grp", "q_z.grp"}) {
    const Presentation q = quotient(file);
    const RipsOutput out = rips_construct(q, 4);
    for (int r = 0; r <= 2; ++r) {
      const SchreierBall s = enumerate_stable(out.g_presentation, out.h_generators, r);
      ASSERT_TRUE(s.stable) << file;
      const SchreierBall qc = enumerate_stable(q, SubgroupSpec{}, r);
      std::vector<int> gens(static_cast<std::size_t>(q.generator_count()));
      std::iota(gens.begin(), gens.end(), 0);
      EXPECT_TRUE(graphs_isomorphic(s.graph.restricted_to(gens), qc.graph)) << file << " r=" << r;
      for (Vertex v = 0; static_cast<std::size_t>(v) < s.size(); ++v) {
        for (int k = q.letter_count(); k < out.g_presentation.letter_count(); ++k) EXPECT_EQ(s.graph.target(v, k), v);
      }
    }
  }
}
