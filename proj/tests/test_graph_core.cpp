#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <numeric>

#include "ctqw/intersection.hpp"
#include "ctqw/odd_graph.hpp"

using namespace ctqw;

namespace {
std::int64_t binomial(int n, int r) {
  std::int64_t v = 1;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}
}  // namespace

TEST_CASE("triangle O_2") {
  const auto g = build_odd_graph(2);
  REQUIRE(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 3);
  // singleton subsets of a 3-set, pairwise disjoint
  REQUIRE(g.vertices == std::vector<std::uint32_t>{1, 2, 4});
  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) REQUIRE(g.adjacent(u, v));
}

TEST_CASE("Petersen O_3") {
  const auto g = build_odd_graph(3);
  REQUIRE(g.vertex_count() == 10);
  REQUIRE(g.edge_count() == 15);
  for (int v = 0; v < 10; ++v) REQUIRE(g.neighbors[v].size() == 3);
}

TEST_CASE("O_4 counts") {
  const auto g = build_odd_graph(4);
  REQUIRE(g.vertex_count() == 35);
  for (int v = 0; v < 35; ++v) REQUIRE(g.neighbors[v].size() == 4);
}

TEST_CASE("k out of range names the bound") {
  REQUIRE_THROWS_AS(build_odd_graph(1), std::invalid_argument);
  REQUIRE_THROWS_AS(build_odd_graph(9), std::invalid_argument);
  try {
    build_odd_graph(9);
  } catch (const std::invalid_argument& e) {
    REQUIRE(std::string(e.what()).find("8") != std::string::npos);
  }
}

TEST_CASE("vertex encoding invariants") {
  for (int k = 2; k <= 6; ++k) {
    const auto g = build_odd_graph(k);
    REQUIRE(g.vertex_count() == binomial(2 * k - 1, k - 1));
    REQUIRE(std::is_sorted(g.vertices.begin(), g.vertices.end()));
    for (auto m : g.vertices) {
      REQUIRE(std::popcount(m) == k - 1);
      REQUIRE(m < (1u << (2 * k - 1)));
    }
    // adjacency is exactly disjointness
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int w : g.neighbors[u]) REQUIRE((g.vertices[u] & g.vertices[w]) == 0);
  }
}

TEST_CASE("distance basics") {
  const auto g = build_odd_graph(3);
  REQUIRE(distance(g, 4, 4) == 0);
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int w : g.neighbors[u]) REQUIRE(distance(g, u, w) == 1);
  REQUIRE(distance(g, 0, 7) == distance(g, 7, 0));
  REQUIRE_THROWS_AS(distance(g, 0, 99), std::out_of_range);
}

TEST_CASE("overlap of one means distance three on O_4") {
  const auto g = build_odd_graph(4);
  int checked = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (std::popcount(g.vertices[u] & g.vertices[v]) == 1) {
        REQUIRE(distance(g, u, v) == 3);
        ++checked;
      }
  REQUIRE(checked > 0);
}

TEST_CASE("overlap determines distance, all pairs, every k") {
  for (int k = 2; k <= k_max_graph; ++k) {
    const auto g = build_odd_graph(k);
    for (int u = 0; u < g.vertex_count(); ++u) {
      const auto dist = bfs_distances(g, u);
      for (int v = u + 1; v < g.vertex_count(); ++v)
        REQUIRE(distance_via_intersection(g, u, v) == dist[v]);
    }
  }
}

TEST_CASE("distance_via_intersection requires distinct vertices") {
  const auto g = build_odd_graph(4);
  REQUIRE_THROWS_AS(distance_via_intersection(g, 5, 5), std::invalid_argument);
}

TEST_CASE("stratification shells") {
  const auto g3 = build_odd_graph(3);
  REQUIRE(stratify(g3).sizes == std::vector<int>{1, 3, 6});
  const auto g4 = build_odd_graph(4);
  REQUIRE(stratify(g4).sizes == std::vector<int>{1, 4, 12, 18});
  const auto g2 = build_odd_graph(2);
  REQUIRE(stratify(g2).sizes == std::vector<int>{1, 2});

  for (int k = 2; k <= 6; ++k) {
    const auto g = build_odd_graph(k);
    const auto s = stratify(g);
    REQUIRE(s.diameter == k - 1);
    REQUIRE(static_cast<int>(s.strata.size()) == k);
    REQUIRE(s.sizes[0] == 1);
    REQUIRE(std::accumulate(s.sizes.begin(), s.sizes.end(), 0) == g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    for (const auto& shell : s.strata)
      for (int v : shell) {
        REQUIRE(!seen[v]);
        seen[v] = true;
      }
  }
}

TEST_CASE("intersection numbers of O_4 and O_3") {
  const auto g4 = build_odd_graph(4);
  const auto in4 = intersection_numbers(g4, stratify(g4));
  REQUIRE(in4.b == std::vector<std::int64_t>{0, 1, 1, 2});
  REQUIRE(in4.c == std::vector<std::int64_t>{4, 3, 3, 0});
  REQUIRE(in4.a == std::vector<std::int64_t>{0, 0, 0, 2});

  const auto g3 = build_odd_graph(3);
  const auto in3 = intersection_numbers(g3, stratify(g3));
  REQUIRE(in3.a == std::vector<std::int64_t>{0, 0, 2});
  REQUIRE(in3.b == std::vector<std::int64_t>{0, 1, 1});
  REQUIRE(in3.c == std::vector<std::int64_t>{3, 2, 0});
}

TEST_CASE("computed equals closed form for every buildable k") {
  for (int k = 2; k <= k_max_graph; ++k) {
    const auto g = build_odd_graph(k);
    const auto strat = stratify(g);
    const auto counted = intersection_numbers(g, strat);
    const auto closed = closed_form_intersection(k);
    REQUIRE(counted.a == closed.a);
    REQUIRE(counted.b == closed.b);
    REQUIRE(counted.c == closed.c);
    REQUIRE(counted.shell_sizes == closed.shell_sizes);
    // shells from BFS match the recursion
    for (std::size_t i = 0; i < closed.shell_sizes.size(); ++i)
      REQUIRE(closed.shell_sizes[i] == strat.sizes[i]);
  }
}

TEST_CASE("degree closure and shell-size identity at large k") {
  for (int k : {2, 3, 10, 33, 100, 5000}) {
    const auto in = closed_form_intersection(k);
    for (int i = 0; i <= in.d; ++i) REQUIRE(in.a[i] + in.b[i] + in.c[i] == k);
    REQUIRE(in.b[0] == 0);
    REQUIRE(in.c[in.d] == 0);
    if (!in.shell_sizes.empty())
      for (int i = 0; i + 1 <= in.d; ++i)
        REQUIRE(in.shell_sizes[i + 1] * in.b[i + 1] == in.shell_sizes[i] * in.c[i]);
  }
}

TEST_CASE("closed form spot values") {
  for (int k : {2, 5, 17, 10000}) REQUIRE(closed_form_intersection(k).b[1] == 1);
  REQUIRE(closed_form_intersection(10).c[2] == 9);
  REQUIRE_THROWS_AS(closed_form_intersection(1), std::invalid_argument);

  // shell sizes total the vertex count while they fit
  for (int k = 2; k <= 30; ++k) {
    const auto in = closed_form_intersection(k);
    REQUIRE(!in.shell_sizes.empty());
    REQUIRE(std::accumulate(in.shell_sizes.begin(), in.shell_sizes.end(),
                            std::int64_t{0}) == binomial(2 * k - 1, k - 1));
  }
  REQUIRE(closed_form_intersection(100).shell_sizes.empty());
}
