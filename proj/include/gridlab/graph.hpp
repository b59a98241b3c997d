#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridlab/bits.hpp"

namespace gridlab {

using Edge = std::pair<int, int>;

// Immutable finite graph. Data graphs are simple; pattern graphs (flip
// patterns H) may carry loops, recorded separately from the edge set.
class Graph {
 public:
  Graph() = default;

  static Graph simple(int n, std::vector<Edge> edges);
  static Graph pattern(int n, std::vector<Edge> edges, std::vector<int> loops);

  int n() const { return n_; }
  bool is_pattern() const { return pattern_; }

  bool adjacent(int u, int v) const {
    return u != v && (adj_[size_t(u) * size_t(wpr_) + (size_t(v) >> 6)] >> (v & 63)) & 1;
  }
  bool has_loop(int v) const { return loop_bits_.size() ? loop_bits_.test(v) : false; }

  int degree(int v) const { return deg_[size_t(v)]; }  // loops not counted
  int max_degree() const;

  long long edge_count() const { return (long long)edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }      // sorted, u < v
  const std::vector<int>& loops() const { return loops_; }       // sorted
  std::vector<int> neighbors(int v) const;                       // sorted

  std::span<const uint64_t> row(int v) const {
    return {adj_.data() + size_t(v) * size_t(wpr_), size_t(wpr_)};
  }
  int words_per_row() const { return wpr_; }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && pattern_ == o.pattern_ && edges_ == o.edges_ && loops_ == o.loops_;
  }

 private:
  Graph(int n, bool pattern, std::vector<Edge> edges, std::vector<int> loops);

  int n_ = 0;
  int wpr_ = 0;
  bool pattern_ = false;
  std::vector<Edge> edges_;
  std::vector<int> loops_;
  std::vector<int> deg_;
  std::vector<uint64_t> adj_;
  Bits loop_bits_;
};

// Graph plus named unary predicates. Color classes may be empty; the name
// still resolves during formula evaluation.
struct ColoredGraph {
  Graph base;
  std::map<std::string, std::vector<int>> colors;

  static ColoredGraph make(Graph base, std::map<std::string, std::vector<int>> colors);
  static ColoredGraph plain(Graph base) { return make(std::move(base), {}); }

  bool has_color(const std::string& name) const { return masks_.count(name) != 0; }
  const Bits* color_mask(const std::string& name) const {
    auto it = masks_.find(name);
    return it == masks_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, Bits> masks_;
};

}  // namespace gridlab
