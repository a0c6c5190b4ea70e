#include "hypaut/graph_props.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "hypaut/oracles.hpp"

namespace hypaut {
namespace {

using namespace hypaut::testing;

TEST(InducedC4Test, CycleIsItsOwnWitness) {
  auto w = find_induced_c4(cycle4());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->cycle, (std::array<VertexId, 4>{0, 1, 2, 3}));
}

TEST(InducedC4Test, ChordKillsIt) { EXPECT_FALSE(find_induced_c4(cycle4_chord())); }

TEST(InducedC4Test, TreesHaveNone) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) EXPECT_FALSE(find_induced_c4(random_tree(2 + i % 11, rng)));
}

TEST(InducedC4Test, SmallestSortedTuple) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    auto g = random_gnp(4 + i % 7, 0.5, rng);
    const auto n = static_cast<VertexId>(g.order());
    std::optional<std::array<VertexId, 4>> want;
    for (VertexId a = 0; a < n && !want; ++a) {
      for (VertexId b = a + 1; b < n && !want; ++b) {
        for (VertexId c = b + 1; c < n && !want; ++c) {
          for (VertexId d = c + 1; d < n && !want; ++d) {
            if (oracle::induces_cycle(g, VertexSet(n, {a, b, c, d}))) want = std::array<VertexId, 4>{a, b, c, d};
          }
        }
      }
    }
    auto got = find_induced_c4(g);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (!got) continue;
    EXPECT_TRUE(verify_c4(g, *got));
    auto sorted = got->cycle;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, *want);
  }
}

TEST(ChordalityTest, Examples) {
  EXPECT_TRUE(is_chordal(chordality(triangle())));
  auto c5 = chordality(cycle5());
  ASSERT_FALSE(is_chordal(c5));
  EXPECT_EQ(std::get<ChordlessCycle>(c5).cycle.size(), 5u);
  EXPECT_TRUE(verify_certificate(cycle5(), c5));
  auto chord = chordality(cycle4_chord());
  EXPECT_TRUE(is_chordal(chord));
  EXPECT_TRUE(verify_certificate(cycle4_chord(), chord));
  EXPECT_TRUE(is_chordal(chordality(discrete(0))));
}

TEST(ChordalityTest, AgreesWithSubsetEnumerationOnSixVertices) {
  const std::size_t n = 6;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 15); ++mask) {
    auto g = from_mask(n, mask);
    auto cert = chordality(g);
    ASSERT_TRUE(verify_certificate(g, cert)) << mask;
    ASSERT_EQ(is_chordal(cert), !oracle::has_chordless_cycle(g)) << mask;
    if (is_chordal(cert)) {
      ASSERT_FALSE(find_induced_c4(g)) << mask;
    }
  }
}

TEST(ChordalityTest, LargerRandomGraphsGiveValidCertificates) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    auto g = random_gnp(12 + i % 20, 0.1 + 0.05 * (i % 10), rng);
    EXPECT_TRUE(verify_certificate(g, chordality(g)));
  }
}

TEST(SilTest, Examples) {
  auto star = find_sil(star13());
  ASSERT_TRUE(star);
  EXPECT_EQ(star->v, 0u);
  EXPECT_EQ(star->w, 1u);
  EXPECT_EQ(star->component, VertexSet(4, {3}));

  EXPECT_FALSE(find_sil(path2()));

  auto d = find_sil(discrete(3));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->v, 0u);
  EXPECT_EQ(d->w, 1u);
  EXPECT_EQ(d->component, VertexSet(3, {2}));
}

TEST(SilTest, WitnessesVerify) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    auto g = random_gnp(3 + i % 10, 0.3, rng);
    if (auto w = find_sil(g)) {
      EXPECT_TRUE(verify_sil(g, *w));
    }
  }
}

TEST(SilTest, VerifierRejectsBadWitnesses) {
  auto g = star13();
  EXPECT_FALSE(verify_sil(g, {0, 2, VertexSet(4, {3})}));  // adjacent pair
  EXPECT_FALSE(verify_sil(g, {0, 1, VertexSet(4, {2, 3})}));  // not a component
  EXPECT_FALSE(verify_sil(g, {0, 1, VertexSet(4, {0})}));  // contains v
}

TEST(SilTest, WithoutSilConnectedOrTwoCliques) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 15); ++mask) {
    auto g = from_mask(6, mask);
    if (find_sil(g)) continue;
    auto comps = connected_components(g);
    if (comps.size() == 1) continue;
    ASSERT_EQ(comps.size(), 2u) << mask;
    for (const auto& c : comps) ASSERT_TRUE(is_clique(g, c)) << mask;
  }
}

TEST(SilTest, TreesHaveSilIffSomeVertexHasDegreeThree) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    auto g = random_tree(1 + i % 12, rng);
    EXPECT_EQ(find_sil(g).has_value(), max_degree(g) >= 3);
  }
}

TEST(MaximalCliquesTest, Examples) {
  EXPECT_EQ(maximal_cliques(triangle()), (std::vector<VertexSet>{VertexSet(3, {0, 1, 2})}));
  EXPECT_EQ(maximal_cliques(path2()), (std::vector<VertexSet>{VertexSet(3, {0, 1}), VertexSet(3, {1, 2})}));
  auto c4 = maximal_cliques(cycle4());
  std::vector<VertexSet> want{VertexSet(4, {0, 1}), VertexSet(4, {1, 2}), VertexSet(4, {2, 3}),
                              VertexSet(4, {0, 3})};
  std::sort(c4.begin(), c4.end(), lex_less);
  std::sort(want.begin(), want.end(), lex_less);
  EXPECT_EQ(c4, want);
  EXPECT_EQ(maximal_cliques(discrete(2)), (std::vector<VertexSet>{VertexSet(2, {0}), VertexSet(2, {1})}));
}

TEST(MaximalCliquesTest, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    auto g = random_gnp(1 + i % 10, 0.5, rng);
    auto fast = maximal_cliques(g);
    VertexSet covered(g.order());
    for (std::size_t k = 0; k < fast.size(); ++k) {
      covered |= fast[k];
      if (k > 0) {
        const auto& a = fast[k - 1];
        const auto& b = fast[k];
        EXPECT_TRUE(*a.first() < *b.first() || (*a.first() == *b.first() && a.size() <= b.size()));
      }
    }
    EXPECT_EQ(covered, g.vertices());
    auto slow = oracle::maximal_cliques(g);
    std::sort(fast.begin(), fast.end(), lex_less);
    std::sort(slow.begin(), slow.end(), lex_less);
    EXPECT_EQ(fast, slow);
  }
}

TEST(CenterSupportTest, Examples) {
  EXPECT_EQ(center_support(complete(3)), VertexSet(3, {0, 1, 2}));
  EXPECT_TRUE(center_support(cycle4()).empty());
  EXPECT_EQ(center_support(star13()), VertexSet(4, {2}));
}

TEST(CenterSupportTest, AlwaysAClique) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    auto g = random_gnp(1 + i % 9, 0.8, rng);
    auto c = center_support(g);
    EXPECT_TRUE(is_clique(g, c));
    c.for_each([&](VertexId v) { EXPECT_EQ(g.degree(v) + 1, g.order()); });
  }
}

}  // namespace
}  // namespace hypaut
