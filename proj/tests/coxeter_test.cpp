#include "hypaut/coxeter.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

namespace hypaut {
namespace {

using testing::coxeter;
constexpr int kInf = CoxeterMatrix::infinity;

VertexSet all(const CoxeterMatrix& m) { return VertexSet::full(m.rank()); }

IrreducibleClassification classify_all(const CoxeterMatrix& m) { return classify_irreducible(m, all(m)); }

// Path diagram a0 - a1 - ... with the given labels; everything else commutes.
CoxeterMatrix path(std::initializer_list<int> labels) {
  const std::size_t n = labels.size() + 1;
  CoxeterMatrix m(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) m.set(u, v, 2);
  }
  VertexId i = 0;
  for (int l : labels) {
    m.set(i, i + 1, l);
    ++i;
  }
  return m;
}

// Tree or cycle diagram given as (u, v, label) bonds; the rest commute.
CoxeterMatrix diagram(std::size_t n, std::initializer_list<LabeledEdge> bonds) {
  CoxeterMatrix m(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) m.set(u, v, 2);
  }
  for (const auto& b : bonds) m.set(b.u, b.v, b.label);
  return m;
}

TEST(CoxeterMatrixTest, FromPresentationGraph) {
  CoxeterPresentationGraph edge(2, {{0, 1, 3}});
  EXPECT_EQ(coxeter_matrix(edge)(0, 1), 3);
  CoxeterPresentationGraph none(2, std::span<const LabeledEdge>{});
  EXPECT_EQ(coxeter_matrix(none)(0, 1), kInf);
  CoxeterPresentationGraph tri(3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}});
  auto m = coxeter_matrix(tri);
  EXPECT_EQ(m(0, 1), 2);
  EXPECT_EQ(m(1, 2), 3);
  EXPECT_EQ(m(2, 0), 3);
  EXPECT_EQ(m(1, 1), 1);
}

TEST(CoxeterMatrixTest, RejectsBadLabels) {
  EXPECT_THROW(CoxeterPresentationGraph(2, {{0, 1, 1}}), InputError);
  EXPECT_THROW(CoxeterPresentationGraph(2, {{0, 1, 3}, {1, 0, 4}}), InputError);
  CoxeterMatrix m(2);
  EXPECT_THROW(m.set(0, 1, 1), InputError);
}

TEST(CoxeterMatrixTest, PresentationRoundTrip) {
  auto m = coxeter(4, {3, 0, 2, 5, 0, 4});
  EXPECT_EQ(coxeter_matrix(presentation_graph(m)), m);
}

TEST(DiagramComponentsTest, Examples) {
  auto c4 = coxeter(4, {2, 0, 2, 2, 0, 2});
  EXPECT_EQ(diagram_components(c4, all(c4)), (std::vector<VertexSet>{VertexSet(4, {0, 2}), VertexSet(4, {1, 3})}));
  auto p = path({3, 3});
  EXPECT_EQ(diagram_components(p, all(p)).size(), 1u);
  auto k = coxeter(3, {2, 2, 2});
  EXPECT_EQ(diagram_components(k, all(k)).size(), 3u);
}

TEST(DiagramComponentsTest, SingletonsIffEverythingCommutes) {
  std::mt19937_64 rng(41);
  const int labels[] = {2, 2, 2, 3, kInf};
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 6;
    CoxeterMatrix m(n);
    bool all_two = true;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        int l = labels[rng() % 5];
        m.set(u, v, l);
        all_two = all_two && l == 2;
      }
    }
    auto comps = diagram_components(m, all(m));
    EXPECT_EQ(comps.size() == n, all_two);
    // Vertices joined by ∞ share a component.
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (m(u, v) != kInf) continue;
        bool together = false;
        for (const auto& c : comps) together = together || (c.contains(u) && c.contains(v));
        EXPECT_TRUE(together);
      }
    }
  }
}

TEST(ClassifyTest, SmallExamples) {
  EXPECT_EQ(classify_all(CoxeterMatrix(1)), (IrreducibleClassification{TypeKind::Finite, "A1"}));
  EXPECT_EQ(classify_all(CoxeterMatrix(2)), (IrreducibleClassification{TypeKind::Affine, "~A1"}));
  EXPECT_EQ(classify_all(coxeter(3, {3, 3, 3})), (IrreducibleClassification{TypeKind::Affine, "~A2"}));
  EXPECT_EQ(classify_all(path({3, 3})), (IrreducibleClassification{TypeKind::Finite, "A3"}));
  EXPECT_EQ(classify_all(coxeter(3, {2, 3, 7})).kind, TypeKind::Indefinite);
  EXPECT_EQ(classify_all(path({3})), (IrreducibleClassification{TypeKind::Finite, "I2(3)"}));
}

TEST(ClassifyTest, FiniteTables) {
  EXPECT_EQ(classify_all(path({4, 3, 3})).name, "B4");
  EXPECT_EQ(classify_all(path({3, 3, 4})).name, "B4");
  EXPECT_EQ(classify_all(path({3, 4, 3})).name, "F4");
  EXPECT_EQ(classify_all(path({5, 3})).name, "H3");
  EXPECT_EQ(classify_all(path({3, 3, 5})).name, "H4");
  EXPECT_EQ(classify_all(path({8})).name, "I2(8)");
  EXPECT_EQ(classify_all(diagram(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}})).name, "D4");
  EXPECT_EQ(classify_all(diagram(5, {{0, 1, 3}, {1, 2, 3}, {1, 3, 3}, {3, 4, 3}})).name, "D5");
  // E_n: branch vertex with arms 1, 2, n-4.
  EXPECT_EQ(classify_all(diagram(6, {{0, 1, 3}, {0, 2, 3}, {2, 3, 3}, {0, 4, 3}, {4, 5, 3}})).name, "E6");
  EXPECT_EQ(classify_all(diagram(7, {{0, 1, 3}, {0, 2, 3}, {2, 3, 3}, {0, 4, 3}, {4, 5, 3}, {5, 6, 3}})).name,
            "E7");
  EXPECT_EQ(classify_all(diagram(8, {{0, 1, 3}, {0, 2, 3}, {2, 3, 3}, {0, 4, 3}, {4, 5, 3}, {5, 6, 3}, {6, 7, 3}}))
                .name,
            "E8");
}

TEST(ClassifyTest, AffineTables) {
  EXPECT_EQ(classify_all(coxeter(4, {3, 2, 3, 3, 2, 3})).name, "~A3");
  EXPECT_EQ(classify_all(diagram(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 4}})).name, "~B3");
  EXPECT_EQ(classify_all(path({4, 4})).name, "~C2");
  EXPECT_EQ(classify_all(path({4, 3, 4})).name, "~C3");
  EXPECT_EQ(classify_all(diagram(5, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {0, 4, 3}})).name, "~D4");
  EXPECT_EQ(classify_all(diagram(6, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {3, 4, 3}, {3, 5, 3}})).name, "~D5");
  EXPECT_EQ(classify_all(path({3, 3, 4, 3})).name, "~F4");
  EXPECT_EQ(classify_all(path({6, 3})).name, "~G2");
  EXPECT_EQ(classify_all(coxeter(3, {2, 3, 6})).name, "~G2");
  EXPECT_EQ(
      classify_all(diagram(7, {{0, 1, 3}, {1, 2, 3}, {0, 3, 3}, {3, 4, 3}, {0, 5, 3}, {5, 6, 3}})).name, "~E6");
  EXPECT_EQ(classify_all(diagram(8, {{0, 1, 3}, {0, 2, 3}, {2, 3, 3}, {3, 4, 3}, {0, 5, 3}, {5, 6, 3}, {6, 7, 3}}))
                .name,
            "~E7");
  EXPECT_EQ(classify_all(diagram(9, {{0, 1, 3},
                                     {0, 2, 3},
                                     {2, 3, 3},
                                     {0, 4, 3},
                                     {4, 5, 3},
                                     {5, 6, 3},
                                     {6, 7, 3},
                                     {7, 8, 3}}))
                .name,
            "~E8");
}

TEST(ClassifyTest, RejectsReducibleSets) {
  auto m = coxeter(3, {2, 2, 2});
  EXPECT_THROW(classify_all(m), InputError);
  EXPECT_THROW(classify_irreducible(m, VertexSet(3)), InputError);
}

TEST(ClassifyTest, AgreesWithGramSignature) {
  std::mt19937_64 rng(43);
  const int labels[] = {2, 2, 2, 3, 3, 3, 4, 5, 6, kInf};
  int checked = 0;
  while (checked < 2000) {
    const std::size_t n = 1 + rng() % 7;
    CoxeterMatrix m(n);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) m.set(u, v, labels[rng() % 10]);
    }
    if (diagram_components(m, all(m)).size() != 1) continue;
    ++checked;
    auto c = classify_all(m);
    auto sig = gram_signature(gram_matrix(m, all(m)));
    EXPECT_EQ(c.kind == TypeKind::Finite, sig.kind == SignatureKind::PositiveDefinite);
    EXPECT_EQ(c.kind == TypeKind::Affine, sig.kind == SignatureKind::PositiveSemidefinite && sig.nullity == 1);
  }
}

TEST(FiniteSystemTest, Examples) {
  auto m = coxeter(3, {3, 2, 3});
  EXPECT_TRUE(is_finite_system(m, VertexSet(3)));
  EXPECT_TRUE(is_finite_system(m, all(m)));
  EXPECT_FALSE(is_finite_system(coxeter(3, {3, 3, 3}), VertexSet::full(3)));
  EXPECT_TRUE(is_finite_system(coxeter(3, {2, 2, 2}), VertexSet::full(3)));
}

TEST(FiniteSystemTest, ParabolicsOfFiniteAreFinite) {
  std::mt19937_64 rng(47);
  const int labels[] = {2, 2, 3, 3, 4, 5, kInf};
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 6;
    CoxeterMatrix m(n);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) m.set(u, v, labels[rng() % 7]);
    }
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      VertexSet big(n);
      for (VertexId v = 0; v < n; ++v) {
        if ((s >> v) & 1u) big.insert(v);
      }
      if (!is_finite_system(m, big)) continue;
      big.for_each([&](VertexId v) {
        VertexSet smaller = big;
        smaller.erase(v);
        EXPECT_TRUE(is_finite_system(m, smaller));
      });
    }
  }
}

TEST(GramTest, Examples) {
  auto one = gram_matrix(CoxeterMatrix(1), VertexSet::full(1));
  EXPECT_EQ(one.rows(), 1);
  EXPECT_DOUBLE_EQ(one(0, 0), 1.0);
  EXPECT_EQ(gram_signature(one).kind, SignatureKind::PositiveDefinite);

  auto pair = gram_matrix(CoxeterMatrix(2), VertexSet::full(2));
  EXPECT_DOUBLE_EQ(pair(0, 1), -1.0);
  EXPECT_EQ(gram_signature(pair), (GramSignature{SignatureKind::PositiveSemidefinite, 1}));

  auto tri = gram_matrix(coxeter(3, {3, 3, 3}), VertexSet::full(3));
  EXPECT_NEAR(tri(0, 1), -0.5, 1e-15);
  EXPECT_EQ(gram_signature(tri), (GramSignature{SignatureKind::PositiveSemidefinite, 1}));

  EXPECT_EQ(gram_signature(gram_matrix(coxeter(3, {2, 3, 7}), VertexSet::full(3))).kind, SignatureKind::Indefinite);
}

// Lannér diagrams straight from the definition: irreducible, not finite or
// affine, with every proper subset finite.
bool lanner_by_definition(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  if (diagram_components(m, all(m)).size() != 1) return false;
  if (classify_all(m).kind != TypeKind::Indefinite) return false;
  for (VertexId v = 0; v < n; ++v) {
    VertexSet s = all(m);
    s.erase(v);
    if (!is_finite_system(m, s)) return false;
  }
  return true;
}

TEST(LannerTest, RankThreeTriangleCondition) {
  EXPECT_TRUE(is_lanner(coxeter(3, {2, 3, 7}), VertexSet::full(3)));
  EXPECT_FALSE(is_lanner(coxeter(3, {2, 3, 6}), VertexSet::full(3)));
  EXPECT_FALSE(is_lanner(coxeter(3, {3, 3, 0}), VertexSet::full(3)));
  for (int p = 2; p <= 9; ++p) {
    for (int q = 2; q <= 9; ++q) {
      for (int r = 2; r <= 9; ++r) {
        auto m = coxeter(3, {p, q, r});
        EXPECT_EQ(is_lanner(m, all(m)), lanner_by_definition(m)) << p << q << r;
      }
    }
  }
}

void check_lanner_rank(std::size_t n, const std::vector<int>& labels) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::size_t> idx(pairs, 0);
  std::size_t found = 0;
  while (true) {
    CoxeterMatrix m(n);
    std::size_t k = 0;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) m.set(u, v, labels[idx[k++]]);
    }
    // Only systems whose proper parabolics are all finite can be Lannér;
    // the remaining ones are permutations of the table rows, checked below.
    const bool def = lanner_by_definition(m);
    if (def || (n < 5 && labels.size() > 4)) {
      ASSERT_EQ(is_lanner(m, all(m)), def);
    }
    found += def ? 1 : 0;
    std::size_t i = 0;
    while (i < pairs && ++idx[i] == labels.size()) idx[i++] = 0;
    if (i == pairs) break;
  }
  EXPECT_GT(found, 0u);
}

TEST(LannerTest, TableRowsSatisfyDefinition) {
  for (const auto& row : detail::kLannerRank4) {
    CoxeterMatrix m(4);
    std::size_t k = 0;
    for (VertexId u = 0; u < 4; ++u) {
      for (VertexId v = u + 1; v < 4; ++v) m.set(u, v, row[k++]);
    }
    EXPECT_TRUE(lanner_by_definition(m));
  }
  for (const auto& row : detail::kLannerRank5) {
    CoxeterMatrix m(5);
    std::size_t k = 0;
    for (VertexId u = 0; u < 5; ++u) {
      for (VertexId v = u + 1; v < 5; ++v) m.set(u, v, row[k++]);
    }
    EXPECT_TRUE(lanner_by_definition(m));
  }
}

TEST(LannerTest, RankFourTableMatchesDefinition) { check_lanner_rank(4, {2, 3, 4, 5, 6, kInf}); }

TEST(LannerTest, RankFiveTableMatchesDefinition) { check_lanner_rank(5, {2, 3, 4, 5}); }

CoxeterMatrix random_system(std::mt19937_64& rng, std::size_t n) {
  const int labels[] = {2, 2, 2, 2, 3, 3, 3, 4, 5, 6, kInf};
  CoxeterMatrix m(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) m.set(u, v, labels[rng() % 11]);
  }
  return m;
}

TEST(MinimalInfiniteTest, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    auto m = random_system(rng, 1 + i % 9);
    const std::size_t n = m.rank();
    std::vector<VertexSet> want;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      VertexSet set(n);
      for (VertexId v = 0; v < n; ++v) {
        if ((s >> v) & 1u) set.insert(v);
      }
      if (is_finite_system(m, set)) continue;
      bool minimal = true;
      set.for_each([&](VertexId v) {
        VertexSet t = set;
        t.erase(v);
        minimal = minimal && is_finite_system(m, t);
      });
      if (minimal) want.push_back(set);
    }
    std::sort(want.begin(), want.end(), size_lex_less);
    auto got = minimal_infinite_subsets(m);
    ASSERT_EQ(got, want);
    for (const auto& s : got) {
      const bool kind_ok = (s.size() == 2) || classify_irreducible(m, s).kind == TypeKind::Affine || is_lanner(m, s);
      EXPECT_TRUE(kind_ok);
    }
  }
}

TEST(EuclideanTest, Examples) {
  auto tri = find_euclidean_subdiagram(coxeter(3, {3, 3, 3}));
  ASSERT_TRUE(tri);
  EXPECT_EQ(tri->subset, VertexSet::full(3));
  EXPECT_EQ(tri->type_name, "~A2");
  EXPECT_FALSE(find_euclidean_subdiagram(path({3, 3, 3, 3})));
  EXPECT_FALSE(find_euclidean_subdiagram(diagram(8, {{0, 1, 3}, {0, 2, 3}, {2, 3, 3}, {0, 4, 3}, {4, 5, 3}, {5, 6, 3},
                                                     {6, 7, 3}})));
  auto g2 = find_euclidean_subdiagram(coxeter(3, {2, 3, 6}));
  ASSERT_TRUE(g2);
  EXPECT_EQ(g2->type_name, "~G2");
  EXPECT_TRUE(verify_euclidean(coxeter(3, {2, 3, 6}), *g2));
  // An ∞ pair is affine of rank 2 only.
  EXPECT_FALSE(find_euclidean_subdiagram(CoxeterMatrix(2)));
  EXPECT_TRUE(find_euclidean_subdiagram(CoxeterMatrix(2), 2));
}

TEST(CommutingPairTest, Examples) {
  auto c4 = coxeter(4, {2, 0, 2, 2, 0, 2});
  auto w = find_commuting_infinite_pair(c4);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->first, VertexSet(4, {0, 2}));
  EXPECT_EQ(w->second, VertexSet(4, {1, 3}));
  EXPECT_TRUE(verify_commuting_pair(c4, *w));
  EXPECT_FALSE(find_commuting_infinite_pair(coxeter(3, {2, 3, 7})));
  EXPECT_FALSE(find_commuting_infinite_pair(path({3, 3})));
}

TEST(SearchModeTest, OptimizedMatchesAllSubsets) {
  std::mt19937_64 rng(59);
  SearchOptions brute;
  brute.mode = SearchMode::AllSubsets;
  for (int i = 0; i < 150; ++i) {
    auto m = random_system(rng, 2 + i % 9);
    auto fast = find_commuting_infinite_pair(m);
    auto slow = find_commuting_infinite_pair(m, brute);
    ASSERT_EQ(fast, slow);
    if (fast) {
      EXPECT_TRUE(verify_commuting_pair(m, *fast));
    }
    auto e_fast = find_euclidean_subdiagram(m);
    ASSERT_EQ(e_fast, find_euclidean_subdiagram(m, 3, brute));
    if (e_fast) {
      EXPECT_TRUE(verify_euclidean(m, *e_fast));
    }
  }
}

TEST(SearchModeTest, CapAndPatternMode) {
  CoxeterMatrix big(21);
  for (VertexId u = 0; u < 21; ++u) {
    for (VertexId v = u + 1; v < 21; ++v) big.set(u, v, v == u + 1 ? 3 : 2);
  }
  try {
    find_euclidean_subdiagram(big);
    FAIL() << "expected a resource error";
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("--pattern-mode"), std::string::npos);
  }
  SearchOptions pattern;
  pattern.pattern_mode = true;
  EXPECT_FALSE(find_euclidean_subdiagram(big, 3, pattern));
  EXPECT_FALSE(find_commuting_infinite_pair(big, pattern));
  big.set(0, 20, 3);  // closes the path into a 21-cycle: ~A20
  auto w = find_euclidean_subdiagram(big, 3, pattern);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->type_name, "~A20");
}

TEST(SearchModeTest, DeadlineInThePastThrows) {
  SearchOptions opt;
  opt.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  opt.mode = SearchMode::AllSubsets;
  // A16 is finite, so the search has to walk every subset.
  auto m = path({3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3});
  EXPECT_THROW(find_commuting_infinite_pair(m, opt), DeadlineExceeded);
}

}  // namespace
}  // namespace hypaut
