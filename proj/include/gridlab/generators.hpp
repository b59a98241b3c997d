#pragma once

#include <array>
#include <string>
#include <vector>

#include "gridlab/graph.hpp"

namespace gridlab {

// Coordinate table identifying a graph with the cube of the given side:
// vertex v <-> coords[v], 1-based coordinates in [1,side]^3.
struct CubeWitness {
  int side = 0;
  std::vector<std::array<int, 3>> coords;

  int index(int i, int j, int k) const {  // inverse of coords for the canonical layout
    return ((i - 1) * side + (j - 1)) * side + (k - 1);
  }
  bool in_range(int c) const { return 1 <= c && c <= side; }
};

struct CubeGraph {
  Graph graph;
  CubeWitness witness;
};

// Q_N: the 3D grid [N]^3 with Manhattan-distance-1 adjacency.
CubeGraph make_cube(int side);

// Q_N plus the four non-decreasing diagonals of every unit cell.
CubeGraph make_diag_cube(int side);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_edgeless(int n);

struct ProductResult {
  Graph graph;
  int left_n = 0, right_n = 0;
  std::vector<std::pair<int, int>> factors;  // product vertex -> (u in G, x in H)
  int index(int u, int x) const { return u * right_n + x; }
};

// Strong product: adjacency when each coordinate is equal or adjacent, not both equal.
ProductResult strong_product(const Graph& g, const Graph& h);

// Checks that (graph, witness) really is the cube adjacency, bit for bit.
bool is_cube_witnessed(const Graph& g, const CubeWitness& w, std::string* why = nullptr);

// Builtin family specs used by the CLI and tests: "path:5", "cycle:4",
// "complete:3", "cube:2", "diagcube:3", "edgeless:4".
Graph graph_from_spec(const std::string& spec);

}  // namespace gridlab
