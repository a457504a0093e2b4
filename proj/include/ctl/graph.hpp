#pragma once

#include <span>
#include <vector>

namespace ctl {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Parallel edges of the source structure collapse to one adjacency entry.
struct Graph {
  std::vector<std::vector<int>> adjacency;

  explicit Graph(std::size_t n = 0) : adjacency(n) {}

  std::size_t size() const { return adjacency.size(); }
  void add_edge(int a, int b);
  /// Sorts and deduplicates adjacency lists; call after the last add_edge.
  void finalize();
  std::size_t max_degree() const;
};

/// Breadth-first distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Connected components of the subgraph induced by `members` (any order).
/// Components are returned sorted internally and ordered by smallest vertex.
std::vector<std::vector<int>> induced_components(const Graph& g, std::span<const int> members);

bool is_connected_subset(const Graph& g, std::span<const int> members);

}  // namespace ctl
