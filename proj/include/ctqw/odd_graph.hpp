#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctqw/errors.hpp"

namespace ctqw {

// Largest k for which the vertex set is enumerated in full.
// C(15,7) = 6435 vertices; everything beyond runs on closed-form
// intersection numbers instead of an explicit graph.
inline constexpr int k_max_graph = 8;

// The odd graph O_k: vertices are the (k-1)-subsets of {1,...,2k-1}, stored
// as bitmasks over the low 2k-1 bit positions; two vertices are adjacent iff
// their subsets are disjoint. Ascending bitmask order doubles as the
// canonical vertex order, so vertex 0 is always {1,...,k-1}.
//
// Immutable after construction; all queries are pure reads.
struct OddGraph {
  int k = 0;
  int ground_set_size = 0;                  // 2k-1
  std::vector<std::uint32_t> vertices;      // ascending, popcount == k-1
  std::vector<std::vector<int>> neighbors;  // exactly k per vertex

  int vertex_count() const { return static_cast<int>(vertices.size()); }

  std::int64_t edge_count() const {
    return static_cast<std::int64_t>(vertex_count()) * k / 2;
  }

  bool adjacent(int u, int v) const {
    return u != v && (vertices[u] & vertices[v]) == 0;
  }

  int index_of(std::uint32_t mask) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), mask);
    if (it == vertices.end() || *it != mask) return -1;
    return static_cast<int>(it - vertices.begin());
  }

  void check_vertex(int v, const char* where) const {
    if (v < 0 || v >= vertex_count())
      throw std::out_of_range(std::string(where) + ": vertex index " +
                              std::to_string(v) + " out of range");
  }
};

inline OddGraph build_odd_graph(int k) {
  if (k < 2 || k > k_max_graph)
    throw std::invalid_argument("build_odd_graph: k must be in [2, " +
                                std::to_string(k_max_graph) + "], got " +
                                std::to_string(k));
  OddGraph g;
  g.k = k;
  g.ground_set_size = 2 * k - 1;
  const std::uint32_t full = (1u << g.ground_set_size) - 1;
  for (std::uint32_t m = 0; m <= full; ++m)
    if (std::popcount(m) == k - 1) g.vertices.push_back(m);

  // The complement of a vertex has exactly k elements, so its neighbors are
  // the complement with one bit dropped. No pairwise scan needed.
  g.neighbors.resize(g.vertices.size());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const std::uint32_t comp = full & ~g.vertices[v];
    for (std::uint32_t bits = comp; bits != 0;) {
      const std::uint32_t low = bits & (~bits + 1u);
      g.neighbors[v].push_back(g.index_of(comp ^ low));
      bits ^= low;
    }
    std::sort(g.neighbors[v].begin(), g.neighbors[v].end());
  }
  return g;
}

inline std::vector<int> bfs_distances(const OddGraph& g, int origin) {
  g.check_vertex(origin, "bfs_distances");
  std::vector<int> dist(g.vertex_count(), -1);
  dist[origin] = 0;
  std::vector<int> frontier{origin};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (int w : g.neighbors[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          next.push_back(w);
        }
    frontier.swap(next);
  }
  return dist;
}

inline int distance(const OddGraph& g, int u, int v) {
  g.check_vertex(u, "distance");
  g.check_vertex(v, "distance");
  if (u == v) return 0;
  return bfs_distances(g, u)[v];
}

// Size of the subset overlap shared by any two vertices at distance n.
inline int intersection_size_at_distance(int k, int n) {
  return (n % 2 == 0) ? (k - 1 - n / 2) : ((n - 1) / 2);
}

// Distance read off the overlap alone: the shells of O_k have pairwise
// distinct overlap sizes, so |u & v| pins the distance without any search.
inline int distance_via_intersection(const OddGraph& g, int u, int v) {
  g.check_vertex(u, "distance_via_intersection");
  g.check_vertex(v, "distance_via_intersection");
  if (u == v)
    throw std::invalid_argument("distance_via_intersection: u and v must differ");
  const int overlap = std::popcount(g.vertices[u] & g.vertices[v]);
  for (int n = 1; n <= g.k - 1; ++n)
    if (intersection_size_at_distance(g.k, n) == overlap) return n;
  throw consistency_error(
      "distance_via_intersection: overlap " + std::to_string(overlap) +
      " matches no shell of O_" + std::to_string(g.k) +
      "; graph construction is broken");
}

// Distance shells around a reference vertex. For O_k the default origin
// (vertex 0 = {1,...,k-1}) is as good as any other by vertex transitivity;
// it is fixed so outputs are reproducible.
struct Stratification {
  int origin = 0;
  std::vector<std::vector<int>> strata;  // strata[i] = vertices at distance i
  std::vector<int> sizes;
  std::vector<int> level_of;             // distance from origin, per vertex
  int diameter = 0;
};

inline Stratification stratify(const OddGraph& g, int origin = 0) {
  g.check_vertex(origin, "stratify");
  Stratification s;
  s.origin = origin;
  s.level_of = bfs_distances(g, origin);
  s.diameter = *std::max_element(s.level_of.begin(), s.level_of.end());
  s.strata.resize(s.diameter + 1);
  for (int v = 0; v < g.vertex_count(); ++v) s.strata[s.level_of[v]].push_back(v);
  s.sizes.reserve(s.strata.size());
  for (const auto& shell : s.strata) s.sizes.push_back(static_cast<int>(shell.size()));
  return s;
}

}  // namespace ctqw
