#include "ellone/covering/standard_coverings.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ellone/error.hpp"

namespace ellone::covering::standard {

int parity_label(int n, int p) {
  p = ((p % n) + n) % n;
  return p % 2 == 0 ? p / 2 : n / 2 + p / 2;
}

OrientedComplex parity_circle(int n) {
  if (n < 4 || n % 2 != 0) throw PreconditionError("parity circle needs an even number >= 4 of vertices");
  std::vector<Simplex> edges;
  for (int p = 0; p < n; ++p) edges.push_back({parity_label(n, p), parity_label(n, p + 1)});
  return OrientedComplex::from_simplices(n, edges);
}

namespace {

std::vector<int> rotation(int n, int step) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(parity_label(n, p))] = parity_label(n, p + step);
  return perm;
}

}  // namespace

CoveringDatum trivial_covering(const OrientedComplex& k) {
  std::vector<int> id(static_cast<std::size_t>(k.vertex_count()));
  std::iota(id.begin(), id.end(), 0);
  return CoveringDatum::make(k, k, id, {}, id);
}

CoveringDatum cyclic_circle_cover(int k, int m) {
  if (k % 2 != 0) throw PreconditionError("base circle needs an even number of vertices");
  const int n = k * m;
  std::vector<int> projection(static_cast<std::size_t>(n));
  std::vector<int> domain;
  for (int p = 0; p < n; ++p) {
    projection[static_cast<std::size_t>(parity_label(n, p))] = parity_label(k, p);
    if (p < k) domain.push_back(parity_label(n, p));
  }
  std::vector<std::vector<int>> gens;
  if (m > 1) gens.push_back(rotation(n, k));
  return CoveringDatum::make(parity_circle(k), parity_circle(n), projection, gens, domain);
}

int coloured_label(int rows, int cols, int i, int j) {
  i = ((i % rows) + rows) % rows;
  j = ((j % cols) + cols) % cols;
  std::vector<std::array<int, 3>> keys;
  for (int a = 0; a < rows; ++a) {
    for (int b = 0; b < cols; ++b) keys.push_back({(a + b) % 3, a, b});
  }
  std::sort(keys.begin(), keys.end());
  const std::array<int, 3> key{(i + j) % 3, i, j};
  return static_cast<int>(std::lower_bound(keys.begin(), keys.end(), key) - keys.begin());
}

OrientedComplex coloured_torus(int rows, int cols) {
  if (rows % 3 != 0 || cols % 3 != 0) throw PreconditionError("coloured torus needs rows and cols divisible by 3");
  std::vector<Simplex> triangles;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int a = coloured_label(rows, cols, i, j);
      const int b = coloured_label(rows, cols, i + 1, j);
      const int c = coloured_label(rows, cols, i + 1, j + 1);
      const int d = coloured_label(rows, cols, i, j + 1);
      triangles.push_back({a, b, c});
      triangles.push_back({a, d, c});
    }
  }
  return OrientedComplex::from_simplices(rows * cols, triangles);
}

CoveringDatum torus_cover() {
  const int rows = 3, cols = 6, base_cols = 3;
  std::vector<int> projection(static_cast<std::size_t>(rows * cols));
  std::vector<int> shift(static_cast<std::size_t>(rows * cols));
  std::vector<int> domain;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int v = coloured_label(rows, cols, i, j);
      projection[static_cast<std::size_t>(v)] = coloured_label(rows, base_cols, i, j);
      shift[static_cast<std::size_t>(v)] = coloured_label(rows, cols, i, j + base_cols);
      if (j < base_cols) domain.push_back(v);
    }
  }
  return CoveringDatum::make(coloured_torus(rows, base_cols), coloured_torus(rows, cols), projection, {shift}, domain);
}

IsometryGroupDatum circle_rotations(int n, int step, int sub_step) {
  std::vector<std::vector<int>> sub;
  if (sub_step != 0) sub.push_back(rotation(n, sub_step));
  return IsometryGroupDatum::make(parity_circle(n), {rotation(n, step)}, sub);
}

IsometryGroupDatum torus_shift() {
  const int rows = 3, cols = 6;
  std::vector<int> shift(static_cast<std::size_t>(rows * cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      shift[static_cast<std::size_t>(coloured_label(rows, cols, i, j))] = coloured_label(rows, cols, i, j + 3);
    }
  }
  return IsometryGroupDatum::make(coloured_torus(rows, cols), {shift}, {});
}

}  // namespace ellone::covering::standard
