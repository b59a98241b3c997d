#include "gridlab/graph.hpp"

#include <algorithm>

#include "gridlab/error.hpp"

namespace gridlab {

Graph Graph::simple(int n, std::vector<Edge> edges) {
  return Graph(n, false, std::move(edges), {});
}

Graph Graph::pattern(int n, std::vector<Edge> edges, std::vector<int> loops) {
  return Graph(n, true, std::move(edges), std::move(loops));
}

Graph::Graph(int n, bool pattern, std::vector<Edge> edges, std::vector<int> loops)
    : n_(n), wpr_(std::max(1, bit_words(n))), pattern_(pattern) {
  if (n < 0) throw Error("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error("graph: edge endpoint out of range: (" + std::to_string(u) + "," +
                  std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v)
      throw Error("graph: edge {" + std::to_string(u) + "," + std::to_string(u) +
                  "} is a loop; loops are kept in the loop set of pattern graphs");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  for (int v : loops)
    if (v < 0 || v >= n) throw Error("graph: loop vertex out of range: " + std::to_string(v));
  if (!pattern && !loops.empty()) throw Error("graph: loops are only permitted on pattern graphs");
  std::sort(loops.begin(), loops.end());
  loops.erase(std::unique(loops.begin(), loops.end()), loops.end());
  loops_ = std::move(loops);

  deg_.assign(size_t(std::max(n, 0)), 0);
  adj_.assign(size_t(std::max(n, 0)) * size_t(wpr_), 0);
  for (auto [u, v] : edges_) {
    adj_[size_t(u) * size_t(wpr_) + (size_t(v) >> 6)] |= uint64_t(1) << (v & 63);
    adj_[size_t(v) * size_t(wpr_) + (size_t(u) >> 6)] |= uint64_t(1) << (u & 63);
    deg_[size_t(u)]++;
    deg_[size_t(v)]++;
  }
  loop_bits_ = Bits::of(n, loops_);
}

int Graph::max_degree() const {
  int m = 0;
  for (int d : deg_) m = std::max(m, d);
  return m;
}

std::vector<int> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw Error("graph: vertex out of range: " + std::to_string(v));
  std::vector<int> out;
  out.reserve(size_t(deg_[size_t(v)]));
  for_each_bit(row(v), [&](int u) { out.push_back(u); });
  return out;
}

ColoredGraph ColoredGraph::make(Graph base, std::map<std::string, std::vector<int>> colors) {
  ColoredGraph g;
  for (auto& [name, verts] : colors) {
    if (name.empty()) throw Error("colored graph: empty color name");
    for (int v : verts)
      if (v < 0 || v >= base.n())
        throw Error("colored graph: color '" + name + "' marks invalid vertex " +
                    std::to_string(v));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    g.masks_.emplace(name, Bits::of(base.n(), verts));
  }
  g.base = std::move(base);
  g.colors = std::move(colors);
  return g;
}

}  // namespace gridlab
