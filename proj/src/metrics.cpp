#include "gridlab/metrics.hpp"

#include <algorithm>

#include "gridlab/error.hpp"

namespace gridlab {

std::vector<int> bfs_distances(const Graph& g, int src) {
  if (src < 0 || src >= g.n()) throw Error("bfs: source out of range");
  std::vector<int> dist(size_t(g.n()), -1);
  Bits frontier(g.n()), visited(g.n()), next(g.n());
  frontier.set(src);
  visited.set(src);
  dist[size_t(src)] = 0;
  int d = 0;
  while (frontier.any()) {
    d++;
    std::fill(next.words().begin(), next.words().end(), 0);
    for_each_bit(frontier.words(), [&](int v) { next.or_with(g.row(v)); });
    next.andnot_with(visited.words());
    for_each_bit(next.words(), [&](int v) { dist[size_t(v)] = d; });
    visited.or_with(next.words());
    frontier = next;
  }
  return dist;
}

Bits ball_bits(const Graph& g, int center, int r) {
  if (center < 0 || center >= g.n()) throw Error("ball: center out of range");
  Bits cur(g.n());
  cur.set(center);
  Bits frontier = cur;
  for (int step = 0; step < r && frontier.any(); step++) {
    Bits next(g.n());
    for_each_bit(frontier.words(), [&](int v) { next.or_with(g.row(v)); });
    next.andnot_with(cur.words());
    cur.or_with(next.words());
    frontier = next;
  }
  return cur;
}

std::vector<int> ball(const Graph& g, int center, int r) {
  return ball_bits(g, center, r).to_vector();
}

int eccentricity(const Graph& g, int v) {
  auto d = bfs_distances(g, v);
  int e = 0;
  for (int x : d) e = std::max(e, x);
  return e;
}

GraphMetrics graph_metrics(const Graph& g) {
  GraphMetrics m;
  m.max_degree = g.max_degree();
  if (g.n() == 0) {
    m.connected = true;
    m.diameter = 0;
    return m;
  }
  int diam = 0;
  for (int v = 0; v < g.n(); v++) {
    auto d = bfs_distances(g, v);
    for (int x : d) {
      if (x < 0) {
        m.connected = false;
        m.diameter = std::nullopt;
        return m;
      }
      diam = std::max(diam, x);
    }
  }
  m.connected = true;
  m.diameter = diam;
  return m;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  Bits seen(g.n());
  for (int v = 0; v < g.n(); v++) {
    if (seen.test(v)) continue;
    auto d = bfs_distances(g, v);
    std::vector<int> comp;
    for (int u = 0; u < g.n(); u++)
      if (d[size_t(u)] >= 0) {
        comp.push_back(u);
        seen.set(u);
      }
    comps.push_back(std::move(comp));
  }
  return comps;
}

InducedResult induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> a = keep;
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end())
    throw Error("induced_subgraph: duplicate vertex in selection");
  for (int v : a)
    if (v < 0 || v >= g.n())
      throw Error("induced_subgraph: vertex out of range: " + std::to_string(v));
  InducedResult r;
  r.old_to_new.assign(size_t(g.n()), -1);
  r.new_to_old = a;
  for (int i = 0; i < int(a.size()); i++) r.old_to_new[size_t(a[size_t(i)])] = i;
  std::vector<Edge> edges;
  for (int i = 0; i < int(a.size()); i++)
    for (int j = i + 1; j < int(a.size()); j++)
      if (g.adjacent(a[size_t(i)], a[size_t(j)])) edges.push_back({i, j});
  std::vector<int> loops;
  for (int v : g.loops())
    if (r.old_to_new[size_t(v)] >= 0) loops.push_back(r.old_to_new[size_t(v)]);
  r.graph = g.is_pattern() ? Graph::pattern(int(a.size()), std::move(edges), std::move(loops))
                           : Graph::simple(int(a.size()), std::move(edges));
  return r;
}

ColoredInducedResult colored_induced_subgraph(const ColoredGraph& g, const std::vector<int>& keep) {
  InducedResult base = induced_subgraph(g.base, keep);
  std::map<std::string, std::vector<int>> colors;
  for (auto& [name, verts] : g.colors) {
    std::vector<int> mapped;
    for (int v : verts)
      if (base.old_to_new[size_t(v)] >= 0) mapped.push_back(base.old_to_new[size_t(v)]);
    colors.emplace(name, std::move(mapped));
  }
  ColoredInducedResult r{ColoredGraph::make(std::move(base.graph), std::move(colors)),
                         std::move(base.old_to_new), std::move(base.new_to_old)};
  return r;
}

const std::vector<int>& DistanceOracle::row(int v) const {
  if (v < 0 || v >= g_->n()) throw Error("distance oracle: vertex out of range");
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (done_[size_t(v)]) return rows_[size_t(v)];
  }
  auto d = bfs_distances(*g_, v);
  std::lock_guard<std::mutex> lock(mu_);
  if (!done_[size_t(v)]) {
    rows_[size_t(v)] = std::move(d);
    done_[size_t(v)] = 1;
  }
  return rows_[size_t(v)];
}

}  // namespace gridlab
