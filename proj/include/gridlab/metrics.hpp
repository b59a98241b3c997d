#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "gridlab/graph.hpp"

namespace gridlab {

// distances from src; -1 for unreachable vertices
std::vector<int> bfs_distances(const Graph& g, int src);

// closed ball N_r[center], sorted
std::vector<int> ball(const Graph& g, int center, int r);
Bits ball_bits(const Graph& g, int center, int r);

int eccentricity(const Graph& g, int v);  // within the component of v

struct GraphMetrics {
  bool connected = false;
  std::optional<int> diameter;  // nullopt means infinite (disconnected)
  int max_degree = 0;
};
GraphMetrics graph_metrics(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

struct InducedResult {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for dropped vertices
  std::vector<int> new_to_old;
};
// keep may be unsorted; duplicates and out-of-range vertices are rejected.
InducedResult induced_subgraph(const Graph& g, const std::vector<int>& keep);

struct ColoredInducedResult {
  ColoredGraph graph;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};
ColoredInducedResult colored_induced_subgraph(const ColoredGraph& g, const std::vector<int>& keep);

// Per-source BFS rows, computed once and shared. Safe for concurrent readers.
class DistanceOracle {
 public:
  explicit DistanceOracle(const Graph& g) : g_(&g), rows_(size_t(g.n())), done_(size_t(g.n()), 0) {}

  const std::vector<int>& row(int v) const;
  int dist(int u, int v) const { return row(u)[size_t(v)]; }  // -1 = unreachable

 private:
  const Graph* g_;
  mutable std::mutex mu_;
  mutable std::vector<std::vector<int>> rows_;
  mutable std::vector<char> done_;
};

}  // namespace gridlab
