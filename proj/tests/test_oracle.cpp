#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace fairclique;
using VSet = std::set<std::vector<vertex_t>>;

TEST(BkPivot, Triangle) {
  auto g = fixtures::complete({0, 0, 0});
  EXPECT_EQ(naive::as_set(bk_pivot_maximal_cliques(g)), (VSet{{0, 1, 2}}));
}

TEST(BkPivot, K4MinusEdge) {
  auto g = fixtures::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, {0, 0, 0, 0});
  EXPECT_EQ(naive::as_set(bk_pivot_maximal_cliques(g)), (VSet{{0, 1, 2}, {0, 1, 3}}));
}

TEST(BkPivot, MatchesSubsetBruteForce) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto g = fixtures::random_instance(20, 0.5, 1, seed);
    EXPECT_EQ(naive::as_set(bk_pivot_maximal_cliques(g)), naive::maximal_cliques(g));
  }
}

TEST(BkPivot, RespectsMask) {
  auto g = fixtures::load("f3");
  VertexMask m(g.num_vertices());
  m.remove(*g.find_original(7));
  auto cs = bk_pivot_maximal_cliques(g, m);
  VSet expect{fixtures::ids(g, {1, 2, 3, 4, 5, 6}), fixtures::ids(g, {1, 8})};
  EXPECT_EQ(naive::as_set(cs), expect);
}

TEST(BaseWeak, Fixture) {
  auto f2 = fixtures::load("f2");
  EXPECT_EQ(naive::as_set(base_weak(f2, 3)), (VSet{fixtures::ids(f2, {1, 2, 3, 4, 5, 6, 7})}));
  auto g = fixtures::random_instance(15, 0.4, 2, 3);
  EXPECT_EQ(base_weak(g, 0), bk_pivot_maximal_cliques(g));
}

TEST(BaseStrong, Fixtures) {
  auto f1 = fixtures::load("f1");
  EXPECT_EQ(naive::as_set(base_strong(f1, 2)), (VSet{fixtures::ids(f1, {1, 2, 3, 4, 5, 6})}));
  auto f2 = fixtures::load("f2");
  VSet four;
  for (auto q : {fixtures::ids(f2, {2, 3, 4, 5, 6, 7}), fixtures::ids(f2, {1, 3, 4, 5, 6, 7}),
                 fixtures::ids(f2, {1, 2, 4, 5, 6, 7}), fixtures::ids(f2, {1, 2, 3, 4, 5, 6})})
    four.insert(q);
  EXPECT_EQ(naive::as_set(base_strong(f2, 3)), four);
  EXPECT_TRUE(base_strong(f1, 4).empty());  // k * 2 > n
}

TEST(BaseRelative, Degeneracies) {
  auto f2 = fixtures::load("f2");
  EXPECT_EQ(naive::as_set(base_relative(f2, 3, 1)), (VSet{fixtures::ids(f2, {1, 2, 3, 4, 5, 6, 7})}));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = fixtures::random_instance(16, 0.5, 2 + attr_t(seed % 2), seed);
    for (int k = 1; k <= 2; ++k) {
      EXPECT_EQ(base_relative(g, k, 0), base_strong(g, k));
      EXPECT_EQ(base_relative(g, k, g.num_vertices()), base_weak(g, k));
    }
  }
}

TEST(Baselines, MatchDefinitions) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    attr_t d = 1 + attr_t(seed % 3);
    auto g = fixtures::random_instance(14, 0.35 + 0.05 * double(seed % 4), d, seed + 60);
    for (int k = 1; k <= 2; ++k) {
      EXPECT_EQ(naive::as_set(base_weak(g, k)), naive::weak(g, k));
      EXPECT_EQ(naive::as_set(base_strong(g, k)), naive::strong(g, k));
      EXPECT_EQ(naive::as_set(base_relative(g, k, 1)), naive::relative(g, k, 1));
    }
  }
}

TEST(Baselines, WeakEnumeratorAgreesOnManyInstances) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = fixtures::random_instance(8 + vertex_t(seed % 20), 0.2 + 0.2 * double(seed % 3), 1 + attr_t(seed % 3),
                                       seed + 7000);
    int k = int(seed % 4);
    EXPECT_EQ(wfc_enum(g, k), base_weak(g, k)) << seed;
  }
}
