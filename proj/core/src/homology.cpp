#include "ellone/homology.hpp"

#include <string>

#include "ellone/error.hpp"

namespace ellone {

std::size_t homology_rank(const OrientedComplex& k, int n) {
  if (n < 0 || n > k.dimension()) {
    if (n > k.dimension()) return 0;
    throw PreconditionError("homology_rank: negative degree " + std::to_string(n));
  }
  const std::size_t cycles = k.count(n) - (n == 0 ? 0 : rank(boundary_matrix(k, n)));
  const std::size_t boundaries = n == k.dimension() ? 0 : rank(boundary_matrix(k, n + 1));
  return cycles - boundaries;
}

std::vector<std::size_t> homology_ranks(const OrientedComplex& k) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= k.dimension(); ++n) out.push_back(homology_rank(k, n));
  return out;
}

std::vector<Cochain> cohomology_basis(const OrientedComplex& k, int n) {
  if (n < 0) throw PreconditionError("cohomology_basis: negative degree");
  if (n > k.dimension()) return {};
  // cocycles: kernel of delta^n = transpose of d_{n+1}
  std::vector<DenseVector> cocycles;
  if (n == k.dimension()) {
    for (std::size_t i = 0; i < k.count(n); ++i) {
      DenseVector e(k.count(n));
      e[i] = 1;
      cocycles.push_back(std::move(e));
    }
  } else {
    cocycles = kernel_basis(boundary_matrix(k, n + 1).transpose());
  }
  std::vector<DenseVector> coboundaries;
  if (n > 0) {
    const SparseMatrix delta = boundary_matrix(k, n).transpose();
    for (const auto& column : delta.columns) {
      DenseVector v(k.count(n));
      for (const auto& [row, value] : column) v[row] = value;
      coboundaries.push_back(std::move(v));
    }
  }
  std::vector<Cochain> out;
  for (const auto& v : complement_basis(coboundaries, cocycles)) out.push_back(cochain_from_dense(n, v));
  return out;
}

std::vector<Chain> homology_basis(const OrientedComplex& k, int n) {
  if (n < 0) throw PreconditionError("homology_basis: negative degree");
  if (n > k.dimension()) return {};
  std::vector<DenseVector> cycles;
  if (n == 0) {
    for (std::size_t i = 0; i < k.count(0); ++i) {
      DenseVector e(k.count(0));
      e[i] = 1;
      cycles.push_back(std::move(e));
    }
  } else {
    cycles = kernel_basis(boundary_matrix(k, n));
  }
  std::vector<DenseVector> boundaries;
  if (n < k.dimension()) {
    const SparseMatrix d = boundary_matrix(k, n + 1);
    for (const auto& column : d.columns) {
      DenseVector v(k.count(n));
      for (const auto& [row, value] : column) v[row] = value;
      boundaries.push_back(std::move(v));
    }
  }
  std::vector<Chain> out;
  for (const auto& v : complement_basis(boundaries, cycles)) out.push_back(chain_from_dense(n, v));
  return out;
}

std::optional<Cochain> coboundary_primitive(const OrientedComplex& k, const Cochain& f) {
  validate(k, f);
  const int n = f.degree();
  if (n == 0) {
    if (f.is_zero()) return Cochain(-1);
    return std::nullopt;
  }
  const SparseMatrix delta = boundary_matrix(k, n).transpose();
  auto x = solve(delta, to_dense(f, k.count(n)));
  if (!x) return std::nullopt;
  return cochain_from_dense(n - 1, *x);
}

std::optional<Chain> boundary_primitive(const OrientedComplex& k, const Chain& c) {
  validate(k, c);
  const int n = c.degree();
  if (n == k.dimension()) {
    if (c.is_zero()) return Chain(n + 1);
    return std::nullopt;
  }
  auto x = solve(boundary_matrix(k, n + 1), to_dense(c, k.count(n)));
  if (!x) return std::nullopt;
  return chain_from_dense(n + 1, *x);
}

bool is_cycle(const OrientedComplex& k, const Chain& c) {
  if (c.degree() == 0) {
    validate(k, c);
    return true;
  }
  return boundary(k, c).is_zero();
}

bool is_cocycle(const OrientedComplex& k, const Cochain& f) { return coboundary(k, f).is_zero(); }

}  // namespace ellone
