#include "ellone/groupcoh/cohomology.hpp"

#include <string>

#include "ellone/error.hpp"
#include "ellone/groupcoh/extension.hpp"
#include "ellone/seminorm/seminorm.hpp"

namespace ellone::groupcoh {

std::string to_string(Pipeline p) { return p == Pipeline::kOrbit ? "orbit" : "bounded"; }

namespace {

std::size_t orbit_count(int order, int n) { return n < 0 ? 1 : BarCochain(order, n - 1).size(); }

// Orbit of an (n+1)-tuple: coordinates of (g0^-1 g1, ..., g0^-1 gn).
std::size_t orbit_of(const FiniteGroup& group, const std::vector<int>& t) {
  std::size_t out = 0;
  const int inv = group.inverse(t.front());
  for (std::size_t i = 1; i < t.size(); ++i) {
    out = out * static_cast<std::size_t>(group.order()) + static_cast<std::size_t>(group.multiply(inv, t[i]));
  }
  return out;
}

DenseVector orbit_coordinates(const FiniteGroup& group, const BarCochain& f) {
  const int n = f.degree();
  if (n < 0) return {f[0]};
  DenseVector out(orbit_count(group.order(), n));
  const std::size_t e = static_cast<std::size_t>(group.identity());
  for (std::size_t o = 0; o < out.size(); ++o) out[o] = f[e * out.size() + o];
  return out;
}

void check_degree(int n, int cap) {
  if (n < 0) throw PreconditionError("cohomology degree must be nonnegative");
  if (n > cap) throw ResourceError("degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

std::vector<DenseVector> columns(const SparseMatrix& m) {
  std::vector<DenseVector> out;
  for (std::size_t j = 0; j < m.cols; ++j) {
    DenseVector v(m.rows);
    for (const auto& [i, x] : m.columns[j]) v[i] = x;
    out.push_back(std::move(v));
  }
  return out;
}

SparseMatrix from_columns(std::size_t rows, const std::vector<DenseVector>& cols) {
  SparseMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      if (cols[j][i] != 0) m.add(i, j, cols[j][i]);
    }
  }
  return m;
}

// delta applied to each invariant basis vector, in ambient coordinates.
SparseMatrix bounded_differential(const FiniteGroup& group, int n, const std::vector<DenseVector>& basis) {
  std::vector<DenseVector> images;
  for (const auto& b : basis) {
    BarCochain f(group.order(), n);
    for (std::size_t i = 0; i < b.size(); ++i) f[i] = b[i];
    images.push_back(bar_differential(f).values());
  }
  return from_columns(BarCochain(group.order(), n + 1).size(), images);
}

}  // namespace

BarCochain orbit_cochain(const FiniteGroup& group, int degree, std::size_t orbit) {
  BarCochain out(group.order(), degree);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    if (degree < 0 || orbit_of(group, out.tuple(idx)) == orbit) out[idx] = 1;
  }
  return out;
}

SparseMatrix orbit_differential(const FiniteGroup& group, int n) {
  const int order = group.order();
  const std::size_t source = orbit_count(order, n);
  const std::size_t target = orbit_count(order, n + 1);
  SparseMatrix m(target, source);
  std::vector<int> rep(static_cast<std::size_t>(n + 2));
  std::vector<int> face(static_cast<std::size_t>(n + 1));
  for (std::size_t o = 0; o < target; ++o) {
    rep[0] = group.identity();
    std::size_t rest = o;
    for (std::size_t i = rep.size(); i-- > 1;) {
      rep[i] = static_cast<int>(rest % static_cast<std::size_t>(order));
      rest /= static_cast<std::size_t>(order);
    }
    for (std::size_t i = 0; i < rep.size(); ++i) {
      std::size_t w = 0;
      for (std::size_t j = 0; j < rep.size(); ++j) {
        if (j != i) face[w++] = rep[j];
      }
      const std::size_t col = n < 0 ? 0 : orbit_of(group, face);
      m.add(o, col, i % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

std::vector<DenseVector> invariant_basis(const FiniteGroup& group, int n) {
  const std::size_t dim = BarCochain(group.order(), n).size();
  // Rows: (g.f - f)(t) for every g and tuple t.
  SparseMatrix diff(dim * static_cast<std::size_t>(group.order()), dim);
  BarCochain probe(group.order(), n);
  for (int g = 0; g < group.order(); ++g) {
    const int inv = group.inverse(g);
    for (std::size_t idx = 0; idx < dim; ++idx) {
      auto t = probe.tuple(idx);
      for (int& x : t) x = group.multiply(inv, x);
      const std::size_t row = static_cast<std::size_t>(g) * dim + idx;
      const std::size_t src = probe.index(t);
      if (src != idx) {
        diff.add(row, src, 1);
        diff.add(row, idx, -1);
      }
    }
  }
  return kernel_basis(diff);
}

Rational canonical_seminorm(const FiniteGroup& group, const BarCochain& f, Pipeline pipeline,
                            seminorm::PivotRule rule) {
  if (!is_invariant(group, f)) throw PreconditionError("cochain is not invariant");
  const int n = f.degree();
  if (pipeline == Pipeline::kOrbit) {
    // The sup norm of an invariant cochain is the max over orbit representatives.
    const std::vector<DenseVector> dirs = n >= 1 ? columns(orbit_differential(group, n - 1)) : std::vector<DenseVector>{};
    return seminorm::linf_minimize(orbit_coordinates(group, f), dirs, rule).value;
  }
  std::vector<DenseVector> dirs;
  if (n >= 1) dirs = columns(bounded_differential(group, n - 1, invariant_basis(group, n - 1)));
  return seminorm::linf_minimize(f.values(), dirs, rule).value;
}

GroupCohomology group_cohomology(const FiniteGroup& group, int n, Pipeline pipeline, int degree_cap,
                                 seminorm::PivotRule rule) {
  check_degree(n, degree_cap);
  GroupCohomology out;
  out.degree = n;
  out.pipeline = pipeline;
  const int order = group.order();
  std::vector<DenseVector> cocycles;
  std::vector<DenseVector> boundaries;
  if (pipeline == Pipeline::kOrbit) {
    cocycles = kernel_basis(orbit_differential(group, n));
    if (n >= 1) boundaries = columns(orbit_differential(group, n - 1));
    for (const auto& c : complement_basis(boundaries, cocycles)) {
      BarCochain f(order, n);
      for (std::size_t o = 0; o < c.size(); ++o) {
        if (c[o] != 0) f += c[o] * orbit_cochain(group, n, o);
      }
      out.basis.push_back(std::move(f));
    }
  } else {
    const auto inv = invariant_basis(group, n);
    const SparseMatrix d = bounded_differential(group, n, inv);
    for (const auto& coeffs : kernel_basis(d)) {
      DenseVector v(BarCochain(order, n).size());
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeffs[j] * inv[j][i];
      }
      cocycles.push_back(std::move(v));
    }
    if (n >= 1) boundaries = columns(bounded_differential(group, n - 1, invariant_basis(group, n - 1)));
    for (const auto& c : complement_basis(boundaries, cocycles)) out.basis.push_back(from_vector(order, n, c));
  }
  out.rank = out.basis.size();
  for (const auto& f : out.basis) out.seminorms.push_back(canonical_seminorm(group, f, pipeline, rule));
  return out;
}

}  // namespace ellone::groupcoh
