#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "noisyperc/dyngraph.hpp"
#include "oracles.hpp"

using namespace noisyperc;

namespace {
std::vector<std::size_t> sizes(const DynamicGraph& g) { return g.component_sizes().sizes; }
} // namespace

TEST_CASE("new graph is empty with singleton components") {
  DynamicGraph g(3);
  CHECK(g.edge_count() == 0);
  CHECK(sizes(g) == std::vector<std::size_t>{1, 1, 1});

  DynamicGraph big(100);
  const auto s = big.component_sizes();
  CHECK(s.s1 == 1);
  CHECK(s.s2 == 1);

  CHECK_THROWS_AS(DynamicGraph(1), std::invalid_argument);
  CHECK_THROWS_AS(DynamicGraph(0), std::invalid_argument);
}

TEST_CASE("add_edge merges components") {
  DynamicGraph g(3);
  g.add_edge({0, 1});
  CHECK(sizes(g) == std::vector<std::size_t>{2, 1});
  g.add_edge({1, 2});
  CHECK(sizes(g) == std::vector<std::size_t>{3});
  g.add_edge({0, 2});
  CHECK(sizes(g) == std::vector<std::size_t>{3});
  CHECK(g.edge_count() == 3);
  CHECK_THROWS_AS(g.add_edge({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge({0, 7}), std::out_of_range);
  CHECK_THROWS_AS(Edge(1, 1), std::invalid_argument);
}

TEST_CASE("remove_edge splits only on bridges") {
  SUBCASE("bridge") {
    DynamicGraph g(3);
    g.add_edge({0, 1});
    g.add_edge({1, 2});
    g.remove_edge({0, 1});
    CHECK(sizes(g) == std::vector<std::size_t>{2, 1});
    CHECK(g.edge_count() == 1);
  }
  SUBCASE("cycle edge") {
    DynamicGraph g(3);
    g.add_edge({0, 1});
    g.add_edge({1, 2});
    g.add_edge({0, 2});
    g.remove_edge({0, 1});
    CHECK(sizes(g) == std::vector<std::size_t>{3});
  }
  SUBCASE("absent edge") {
    DynamicGraph g(3);
    g.add_edge({0, 1});
    CHECK_THROWS_AS(g.remove_edge({0, 2}), std::invalid_argument);
    CHECK(g.edge_count() == 1);
  }
}

TEST_CASE("component summaries") {
  DynamicGraph empty(4);
  CHECK(sizes(empty) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(empty.component_sizes().s2 == 1);

  DynamicGraph tree(4);
  tree.add_edge({0, 1});
  tree.add_edge({1, 2});
  tree.add_edge({1, 3});
  CHECK(tree.component_sizes().s1 == 4);
  CHECK(tree.component_sizes().s2 == 0);
  CHECK(tree.component_of(3) == 4);

  DynamicGraph two(5);
  two.add_edge({0, 1});
  two.add_edge({2, 3});
  CHECK(sizes(two) == std::vector<std::size_t>{2, 2, 1});

  DynamicGraph path(3);
  path.add_edge({0, 1});
  CHECK(path.component_of(2) == 1);
  CHECK(path.component_of(0) == 2);
  CHECK_THROWS_AS(path.component_of(3), std::out_of_range);
}

TEST_CASE("pair index is a bijection onto [0, C(n,2))") {
  for (std::uint32_t n : {2U, 3U, 7U, 100U, 1001U}) {
    std::uint64_t expected = 0;
    for (VertexId i = 0; i + 1 < n; ++i)
      for (VertexId j = i + 1; j < n; ++j) {
        const Edge e(i, j);
        REQUIRE(pair_index(n, e) == expected);
        REQUIRE(pair_from_index(n, expected) == e);
        ++expected;
      }
    CHECK(expected == pair_count(n));
  }
}

TEST_CASE("incremental components agree with a from-scratch recomputation") {
  Rng rng(12345);
  std::size_t mismatches = 0;
  for (int seq = 0; seq < 2000; ++seq) {
    const auto n = static_cast<std::uint32_t>(2 + uniform_below(rng, 29));
    DynamicGraph g(n);
    std::set<std::pair<std::uint32_t, std::uint32_t>> ref;
    for (int op = 0; op < 60; ++op) {
      const bool add = g.edge_count() == 0 || (!g.saturated() && bernoulli(rng, 0.6));
      if (add) {
        const auto e = g.sample_absent_pairs(1, rng).front();
        g.add_edge(e);
        ref.emplace(e.lo, e.hi);
      } else {
        const auto e = g.sample_present_pairs(1, rng).front();
        g.remove_edge(e);
        ref.erase({e.lo, e.hi});
      }
      const auto got = g.component_sizes();
      if (got.sizes != oracle::component_sizes(n, ref) || got.sizes != g.recompute_components().sizes) ++mismatches;
      std::size_t total = 0;
      for (auto s : got.sizes) total += s;
      if (total != n || got.s1 < got.s2) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("add then remove restores edge set and summary") {
  Rng rng(99);
  DynamicGraph g(20);
  for (int i = 0; i < 25; ++i) g.add_edge(g.sample_absent_pairs(1, rng).front());
  for (int trial = 0; trial < 200; ++trial) {
    auto before = g.edges();
    std::sort(before.begin(), before.end());
    const auto summary = g.component_sizes().sizes;
    const auto e = g.sample_absent_pairs(1, rng).front();
    g.add_edge(e);
    g.remove_edge(e);
    auto after = g.edges();
    std::sort(after.begin(), after.end());
    REQUIRE(after == before);
    REQUIRE(g.component_sizes().sizes == summary);
  }
}

TEST_CASE("absent-pair sampling is uniform") {
  DynamicGraph g(3);
  Rng rng(2024);
  std::map<Edge, std::size_t> counts;
  constexpr std::size_t draws = 100000;
  for (std::size_t i = 0; i < draws; ++i) ++counts[g.sample_absent_pairs(1, rng).front()];
  REQUIRE(counts.size() == 3);
  for (const auto& [e, c] : counts) CHECK(oracle::within_se(double(c) / draws, 1.0 / 3.0, draws));
}

TEST_CASE("absent-pair sampling on a denser graph covers the complement uniformly") {
  // 6 vertices, 12 of 15 pairs present: exercises the enumeration branch.
  DynamicGraph g(6);
  Rng rng(7);
  while (g.edge_count() < 12) g.add_edge(g.sample_absent_pairs(1, rng).front());
  std::map<std::pair<Edge, Edge>, std::size_t> counts;
  constexpr std::size_t draws = 60000;
  for (std::size_t i = 0; i < draws; ++i) {
    auto pair = g.sample_absent_pairs(2, rng);
    REQUIRE(pair.size() == 2);
    REQUIRE(pair[0] != pair[1]);
    REQUIRE_FALSE(g.has_edge(pair[0]));
    REQUIRE_FALSE(g.has_edge(pair[1]));
    ++counts[{pair[0], pair[1]}];
  }
  // 3 absent pairs -> 6 ordered candidate pairs
  REQUIRE(counts.size() == 6);
  for (const auto& [k, c] : counts) CHECK(oracle::within_se(double(c) / draws, 1.0 / 6.0, draws));
}

TEST_CASE("absent-pair sampling fallbacks") {
  DynamicGraph g(3);
  g.add_edge({0, 1});
  g.add_edge({1, 2});
  Rng rng(1);
  const auto got = g.sample_absent_pairs(2, rng);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == Edge(0, 2));

  DynamicGraph k4(4);
  for (VertexId i = 0; i < 4; ++i)
    for (VertexId j = i + 1; j < 4; ++j) k4.add_edge({i, j});
  CHECK_THROWS_AS(k4.sample_absent_pairs(2, rng), NoCandidates);
}

TEST_CASE("present-pair sampling is uniform over unordered pairs") {
  DynamicGraph g(8);
  for (VertexId v = 0; v < 5; ++v) g.add_edge({v, static_cast<VertexId>(v + 1)});
  Rng rng(31337);
  std::map<std::pair<Edge, Edge>, std::size_t> counts;
  constexpr std::size_t draws = 100000;
  for (std::size_t i = 0; i < draws; ++i) {
    auto pair = g.sample_present_pairs(2, rng);
    REQUIRE(pair.size() == 2);
    REQUIRE(g.has_edge(pair[0]));
    REQUIRE(g.has_edge(pair[1]));
    REQUIRE(pair[0] != pair[1]);
    if (pair[1] < pair[0]) std::swap(pair[0], pair[1]);
    ++counts[{pair[0], pair[1]}];
  }
  REQUIRE(counts.size() == 10); // C(5,2)
  for (const auto& [k, c] : counts) CHECK(oracle::within_se(double(c) / draws, 0.1, draws));
}

TEST_CASE("present-pair sampling fallbacks") {
  Rng rng(3);
  DynamicGraph g(4);
  g.add_edge({1, 3});
  const auto got = g.sample_present_pairs(2, rng);
  REQUIRE(got.size() == 1);
  CHECK(got[0] == Edge(1, 3));
  DynamicGraph empty(4);
  CHECK_THROWS_AS(empty.sample_present_pairs(2, rng), NoCandidates);
}

TEST_CASE("edge list serialization") {
  std::vector<Edge> edges{{3, 1}, {0, 2}};
  std::ostringstream out;
  write_edge_list(out, edges);
  CHECK(out.str() == "1 3\n0 2\n");
  std::istringstream in(out.str());
  CHECK(read_edge_list(in) == edges);
  std::istringstream bad("1 x\n");
  CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
}
