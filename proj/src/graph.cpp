#include "ctl/graph.hpp"

#include <algorithm>
#include <deque>

namespace ctl {

void Graph::add_edge(int a, int b) {
  if (a == b) return;
  adjacency[a].push_back(b);
  adjacency[b].push_back(a);
}

void Graph::finalize() {
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& list : adjacency) d = std::max(d, list.size());
  return d;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.adjacency[u]) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> induced_components(const Graph& g, std::span<const int> members) {
  std::vector<char> in(g.size(), 0);
  for (int v : members) in[v] = 1;
  std::vector<int> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> seen(g.size(), 0);
  std::vector<std::vector<int>> components;
  for (int start : sorted) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int w : g.adjacency[u]) {
        if (in[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected_subset(const Graph& g, std::span<const int> members) {
  if (members.empty()) return true;
  return induced_components(g, members).size() == 1;
}

}  // namespace ctl
