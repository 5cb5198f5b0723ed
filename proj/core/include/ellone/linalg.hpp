#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ellone/rational.hpp"

namespace ellone {

using SparseVector = std::map<std::size_t, Rational>;
using DenseVector = std::vector<Rational>;

/// Column-major sparse matrix over the rationals.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  void add(std::size_t row, std::size_t col, const Rational& value);
  Rational at(std::size_t row, std::size_t col) const;
  SparseVector apply(const SparseVector& x) const;
  DenseVector apply(const DenseVector& x) const;
  SparseMatrix transpose() const;
  /// this * other
  SparseMatrix multiply(const SparseMatrix& other) const;
  bool is_zero() const;
};

/// Row-major dense matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<DenseVector> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r, DenseVector(c)) {}
  static DenseMatrix from_sparse(const SparseMatrix& m);

  Rational& operator()(std::size_t r, std::size_t c) { return data[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data[r][c]; }
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(DenseMatrix& m);

/// Rank by sparse exact row reduction.
std::size_t rank(const SparseMatrix& m);

/// Basis of the null space {x : m x = 0}.
std::vector<DenseVector> kernel_basis(const SparseMatrix& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<DenseVector> solve(const SparseMatrix& m, const DenseVector& b);

/// Vectors from `candidates` whose classes form a basis of
/// span(candidates) / span(subspace). Greedy in candidate order.
std::vector<DenseVector> complement_basis(const std::vector<DenseVector>& subspace,
                                          const std::vector<DenseVector>& candidates);

}  // namespace ellone
