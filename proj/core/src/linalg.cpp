#include "ellone/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ellone {

void SparseMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows || col >= cols) throw std::out_of_range("SparseMatrix::add");
  if (value == 0) return;
  auto& column = columns[col];
  auto [it, inserted] = column.emplace(row, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) column.erase(it);
  }
}

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
  auto it = columns.at(col).find(row);
  return it == columns[col].end() ? Rational(0) : it->second;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector out;
  for (const auto& [col, value] : x) {
    for (const auto& [row, entry] : columns.at(col)) {
      Rational& slot = out[row];
      slot += entry * value;
      if (slot == 0) out.erase(row);
    }
  }
  return out;
}

DenseVector SparseMatrix::apply(const DenseVector& x) const {
  DenseVector out(rows);
  for (std::size_t col = 0; col < cols; ++col) {
    if (x[col] == 0) continue;
    for (const auto& [row, entry] : columns[col]) out[row] += entry * x[col];
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols, rows);
  for (std::size_t col = 0; col < cols; ++col) {
    for (const auto& [row, entry] : columns[col]) t.columns[row].emplace(col, entry);
  }
  return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols != other.rows) throw std::invalid_argument("SparseMatrix::multiply: shape mismatch");
  SparseMatrix out(rows, other.cols);
  for (std::size_t col = 0; col < other.cols; ++col) out.columns[col] = apply(other.columns[col]);
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& column : columns) {
    if (!column.empty()) return false;
  }
  return true;
}

DenseMatrix DenseMatrix::from_sparse(const SparseMatrix& m) {
  DenseMatrix d(m.rows, m.cols);
  for (std::size_t col = 0; col < m.cols; ++col) {
    for (const auto& [row, entry] : m.columns[col]) d(row, col) = entry;
  }
  return d;
}

std::vector<std::size_t> rref(DenseMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    std::swap(m.data[p], m.data[r]);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) {
        if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const SparseMatrix& m) {
  // Row reduction keyed by leading column; rows come from the transpose.
  const SparseMatrix t = m.transpose();
  std::map<std::size_t, SparseVector> pivot_rows;
  for (const SparseVector& original : t.columns) {
    SparseVector row = original;
    while (!row.empty()) {
      const std::size_t lead = row.begin()->first;
      auto it = pivot_rows.find(lead);
      if (it == pivot_rows.end()) {
        pivot_rows.emplace(lead, std::move(row));
        break;
      }
      const Rational factor = row.begin()->second / it->second.begin()->second;
      for (const auto& [col, value] : it->second) {
        Rational& slot = row[col];
        slot -= factor * value;
        if (slot == 0) row.erase(col);
      }
    }
  }
  return pivot_rows.size();
}

std::vector<DenseVector> kernel_basis(const SparseMatrix& m) {
  DenseMatrix d = DenseMatrix::from_sparse(m);
  const auto pivots = rref(d);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<DenseVector> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    DenseVector v(m.cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -d(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<DenseVector> solve(const SparseMatrix& m, const DenseVector& b) {
  DenseMatrix aug(m.rows, m.cols + 1);
  for (std::size_t col = 0; col < m.cols; ++col) {
    for (const auto& [row, entry] : m.columns[col]) aug(row, col) = entry;
  }
  for (std::size_t row = 0; row < m.rows; ++row) aug(row, m.cols) = b.at(row);
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  DenseVector x(m.cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols);
  return x;
}

std::vector<DenseVector> complement_basis(const std::vector<DenseVector>& subspace,
                                          const std::vector<DenseVector>& candidates) {
  std::vector<DenseVector> chosen;
  if (candidates.empty()) return chosen;
  const std::size_t n = candidates.front().size();
  std::vector<DenseVector> rows = subspace;
  std::size_t current_rank = 0;
  {
    DenseMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) m.data[i] = rows[i];
    current_rank = rref(m).size();
  }
  for (const DenseVector& v : candidates) {
    rows.push_back(v);
    DenseMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) m.data[i] = rows[i];
    const std::size_t r = rref(m).size();
    if (r > current_rank) {
      current_rank = r;
      chosen.push_back(v);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

}  // namespace ellone
