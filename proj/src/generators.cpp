#include "gridlab/generators.hpp"

#include <cstdlib>

#include "gridlab/error.hpp"

namespace gridlab {

static CubeWitness cube_witness(int side) {
  CubeWitness w;
  w.side = side;
  w.coords.reserve(size_t(side) * size_t(side) * size_t(side));
  for (int i = 1; i <= side; i++)
    for (int j = 1; j <= side; j++)
      for (int k = 1; k <= side; k++) w.coords.push_back({i, j, k});
  return w;
}

CubeGraph make_cube(int side) {
  if (side < 1) throw Error("make_cube: side must be positive");
  CubeWitness w = cube_witness(side);
  std::vector<Edge> edges;
  for (int v = 0; v < int(w.coords.size()); v++) {
    auto [i, j, k] = w.coords[size_t(v)];
    if (i < side) edges.push_back({v, w.index(i + 1, j, k)});
    if (j < side) edges.push_back({v, w.index(i, j + 1, k)});
    if (k < side) edges.push_back({v, w.index(i, j, k + 1)});
  }
  Graph g = Graph::simple(int(w.coords.size()), std::move(edges));
  return {std::move(g), std::move(w)};
}

CubeGraph make_diag_cube(int side) {
  if (side < 1) throw Error("make_diag_cube: side must be positive");
  CubeWitness w = cube_witness(side);
  CubeGraph base = make_cube(side);
  std::vector<Edge> edges = base.graph.edges();
  // non-decreasing diagonals: (i,j,k) to (i+1,j+1,k), (i+1,j,k+1), (i,j+1,k+1), (i+1,j+1,k+1)
  static constexpr int kSteps[4][3] = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  for (int v = 0; v < int(w.coords.size()); v++) {
    auto [i, j, k] = w.coords[size_t(v)];
    for (auto& s : kSteps) {
      int i2 = i + s[0], j2 = j + s[1], k2 = k + s[2];
      if (w.in_range(i2) && w.in_range(j2) && w.in_range(k2))
        edges.push_back({v, w.index(i2, j2, k2)});
    }
  }
  Graph g = Graph::simple(int(w.coords.size()), std::move(edges));
  return {std::move(g), std::move(w)};
}

Graph make_path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; v++) edges.push_back({v, v + 1});
  return Graph::simple(n, std::move(edges));
}

Graph make_cycle(int n) {
  if (n < 3) throw Error("make_cycle: need at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; v++) edges.push_back({v, (v + 1) % n});
  return Graph::simple(n, std::move(edges));
}

Graph make_complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) edges.push_back({u, v});
  return Graph::simple(n, std::move(edges));
}

Graph make_edgeless(int n) { return Graph::simple(n, {}); }

ProductResult strong_product(const Graph& g, const Graph& h) {
  if (g.is_pattern() || h.is_pattern())
    throw Error("strong_product: factors must be loop-free data graphs");
  ProductResult out;
  out.left_n = g.n();
  out.right_n = h.n();
  out.factors.reserve(size_t(g.n()) * size_t(h.n()));
  for (int u = 0; u < g.n(); u++)
    for (int x = 0; x < h.n(); x++) out.factors.push_back({u, x});
  std::vector<Edge> edges;
  for (int a = 0; a < int(out.factors.size()); a++) {
    auto [u, x] = out.factors[size_t(a)];
    for (int b = a + 1; b < int(out.factors.size()); b++) {
      auto [v, y] = out.factors[size_t(b)];
      bool same_u = u == v, same_x = x == y;
      bool adj_u = g.adjacent(u, v), adj_x = h.adjacent(x, y);
      if ((same_u && adj_x) || (same_x && adj_u) || (adj_u && adj_x)) edges.push_back({a, b});
    }
  }
  out.graph = Graph::simple(int(out.factors.size()), std::move(edges));
  return out;
}

bool is_cube_witnessed(const Graph& g, const CubeWitness& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  long long want_n = (long long)w.side * w.side * w.side;
  if (g.n() != want_n || (long long)w.coords.size() != want_n)
    return fail("vertex count does not match side^3");
  std::vector<char> seen(size_t(want_n), 0);
  for (int v = 0; v < g.n(); v++) {
    auto [i, j, k] = w.coords[size_t(v)];
    if (!w.in_range(i) || !w.in_range(j) || !w.in_range(k)) return fail("coordinate out of range");
    int idx = ((i - 1) * w.side + (j - 1)) * w.side + (k - 1);
    if (seen[size_t(idx)]) return fail("coordinate table is not a bijection");
    seen[size_t(idx)] = 1;
  }
  for (int u = 0; u < g.n(); u++) {
    auto [i1, j1, k1] = w.coords[size_t(u)];
    for (int v = u + 1; v < g.n(); v++) {
      auto [i2, j2, k2] = w.coords[size_t(v)];
      int d = std::abs(i1 - i2) + std::abs(j1 - j2) + std::abs(k1 - k2);
      if (g.adjacent(u, v) != (d == 1))
        return fail("adjacency mismatch at vertices " + std::to_string(u) + "," +
                    std::to_string(v));
    }
  }
  return true;
}

Graph graph_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error("graph spec: expected '<kind>:<n>', got '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  int n = std::atoi(spec.c_str() + colon + 1);
  if (n <= 0) throw Error("graph spec: bad size in '" + spec + "'");
  if (kind == "path") return make_path(n);
  if (kind == "cycle") return make_cycle(n);
  if (kind == "complete") return make_complete(n);
  if (kind == "edgeless") return make_edgeless(n);
  if (kind == "cube") return make_cube(n).graph;
  if (kind == "diagcube") return make_diag_cube(n).graph;
  throw Error("graph spec: unknown kind '" + kind + "'");
}

}  // namespace gridlab
