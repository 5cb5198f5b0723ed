#include "ellone/standard_complexes.hpp"

#include <vector>

#include "ellone/error.hpp"

namespace ellone::standard {
namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::vector<Simplex> grid_triangles(int rows, int cols, auto&& vertex) {
  std::vector<Simplex> out;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int a = vertex(i, j);
      const int b = vertex(i + 1, j);
      const int c = vertex(i + 1, j + 1);
      const int d = vertex(i, j + 1);
      out.push_back({a, b, c});
      out.push_back({a, d, c});
    }
  }
  return out;
}

}  // namespace

OrientedComplex point() { return OrientedComplex::from_simplices(1, std::vector<Simplex>{{0}}); }

OrientedComplex simplex(int n) {
  Simplex s;
  for (int v = 0; v <= n; ++v) s.push_back(v);
  return OrientedComplex::from_simplices(n + 1, std::vector<Simplex>{s});
}

OrientedComplex sphere(int n) {
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= n + 1; ++skip) {
    Simplex s;
    for (int v = 0; v <= n + 1; ++v) {
      if (v != skip) s.push_back(v);
    }
    facets.push_back(s);
  }
  return OrientedComplex::from_simplices(n + 2, facets);
}

OrientedComplex circle(int k) {
  if (k < 3) throw PreconditionError("circle needs at least 3 edges");
  std::vector<Simplex> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  return OrientedComplex::from_simplices(k, edges);
}

OrientedComplex two_circles(int k1, int k2) {
  std::vector<Simplex> edges;
  for (int i = 0; i < k1; ++i) edges.push_back({i, (i + 1) % k1});
  for (int i = 0; i < k2; ++i) edges.push_back({k1 + i, k1 + (i + 1) % k2});
  return OrientedComplex::from_simplices(k1 + k2, edges);
}

OrientedComplex torus7() {
  std::vector<Simplex> triangles;
  for (int i = 0; i < 7; ++i) triangles.push_back({i, (i + 1) % 7, (i + 3) % 7});
  for (int i = 0; i < 7; ++i) triangles.push_back({i, (i + 2) % 7, (i + 3) % 7});
  return OrientedComplex::from_simplices(7, triangles);
}

OrientedComplex grid_torus(int rows, int cols) {
  if (rows < 3 || cols < 3) throw PreconditionError("grid torus needs rows, cols >= 3");
  auto vertex = [&](int i, int j) { return mod(i, rows) * cols + mod(j, cols); };
  return OrientedComplex::from_simplices(rows * cols, grid_triangles(rows, cols, vertex));
}

OrientedComplex klein_bottle(int rows, int cols) {
  if (rows < 3 || cols < 3) throw PreconditionError("grid Klein bottle needs rows, cols >= 3");
  // (i, j + cols) ~ (i, j) and (i + rows, j) ~ (i, -j) (flip), j taken mod cols
  auto vertex = [&](int i, int j) {
    const int wraps = (i >= 0) ? i / rows : -((-i + rows - 1) / rows);
    int jj = (wraps % 2 == 0) ? j : -j;
    return mod(i, rows) * cols + mod(jj, cols);
  };
  return OrientedComplex::from_simplices(rows * cols, grid_triangles(rows, cols, vertex));
}

OrientedComplex moebius_strip(int cols) {
  if (cols < 3) throw PreconditionError("Moebius strip needs at least 3 squares");
  // two rows of vertices (0 and 1); crossing column cols swaps the rows
  auto vertex = [&](int i, int j) {
    const int wraps = j / cols;
    const int row = (wraps % 2 == 0) ? i : 1 - i;
    return row * cols + mod(j, cols);
  };
  return OrientedComplex::from_simplices(2 * cols, grid_triangles(1, cols, vertex));
}

OrientedComplex grid_disk(int rows, int cols) {
  auto vertex = [&](int i, int j) { return i * (cols + 1) + j; };
  return OrientedComplex::from_simplices((rows + 1) * (cols + 1), grid_triangles(rows, cols, vertex));
}

OrientedComplex cone(const OrientedComplex& base) {
  const int apex = base.vertex_count();
  std::vector<Simplex> listed;
  for (const SimplexRef& ref : base.maximal_simplices()) {
    Simplex s = base.simplex(ref);
    listed.push_back(s);
    s.push_back(apex);
    listed.push_back(s);
  }
  if (listed.empty()) listed.push_back({apex});
  return OrientedComplex::from_simplices(apex + 1, listed);
}

}  // namespace ellone::standard
