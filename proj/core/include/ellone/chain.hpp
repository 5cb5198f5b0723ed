#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ellone/complex.hpp"
#include "ellone/linalg.hpp"
#include "ellone/rational.hpp"

namespace ellone {

struct ChainTag {};
struct CochainTag {};

/// Sparse homogeneous element of a graded vector space: key -> coefficient,
/// with no stored zeros. `Tag` separates chains from cochains at the type level.
template <class Key, class Tag>
class Graded {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational>;

  Graded() = default;
  explicit Graded(int degree) : degree_(degree) {}
  Graded(int degree, map_type coeffs) : degree_(degree) {
    for (auto& [k, v] : coeffs) add(k, v);
  }

  int degree() const { return degree_; }
  const map_type& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  Rational coefficient(const Key& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void add(const Key& key, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = coeffs_.emplace(key, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  void set(const Key& key, const Rational& value) {
    if (value == 0) {
      coeffs_.erase(key);
    } else {
      coeffs_[key] = value;
    }
  }

  Graded& operator+=(const Graded& other) {
    check_degree(other);
    for (const auto& [k, v] : other.coeffs_) add(k, v);
    return *this;
  }
  Graded& operator-=(const Graded& other) {
    check_degree(other);
    for (const auto& [k, v] : other.coeffs_) add(k, -v);
    return *this;
  }
  Graded& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
    } else {
      for (auto& [k, v] : coeffs_) v *= s;
    }
    return *this;
  }

  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator-(Graded a) { return a *= Rational(-1); }
  friend Graded operator*(const Rational& s, Graded a) { return a *= s; }
  friend bool operator==(const Graded& a, const Graded& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_degree(const Graded& other) const {
    if (other.degree_ != degree_ && !other.is_zero() && !is_zero()) {
      throw std::invalid_argument("degree mismatch: " + std::to_string(degree_) + " vs " +
                                  std::to_string(other.degree_));
    }
  }

  int degree_ = 0;
  map_type coeffs_;
};

/// alpha = sum a_s s over simplex indices of one dimension.
using Chain = Graded<std::size_t, ChainTag>;
/// Functional on chains of one degree; absent indices evaluate to zero.
using Cochain = Graded<std::size_t, CochainTag>;

enum class Augmentation { kOff, kOn };

/// Throws PreconditionError when an index is out of range for the degree.
void validate(const OrientedComplex& k, const Chain& c);
void validate(const OrientedComplex& k, const Cochain& f);

/// Alternating face sum. With augmentation on, a 0-chain maps to the degree -1
/// chain whose single coefficient (index 0) is the coefficient sum.
Chain boundary(const OrientedComplex& k, const Chain& c, Augmentation aug = Augmentation::kOff);

/// Dual differential: <coboundary(f), c> = <f, boundary(c)>. In augmented mode a
/// degree -1 cochain (index 0) maps to the constant 0-cochain.
Cochain coboundary(const OrientedComplex& k, const Cochain& f, Augmentation aug = Augmentation::kOff);

/// Kronecker pairing; throws std::invalid_argument on degree mismatch.
Rational kronecker(const Cochain& f, const Chain& c);

Rational l1_norm(const Chain& c);
Rational linf_norm(const Cochain& f);

/// Matrix of d_n: C_n -> C_{n-1} (rows indexed by (n-1)-simplices). For n == 0
/// the matrix is 0 x count(0) unless augmented, then 1 x count(0).
SparseMatrix boundary_matrix(const OrientedComplex& k, int n, Augmentation aug = Augmentation::kOff);

Chain chain_from_dense(int degree, const DenseVector& v);
Cochain cochain_from_dense(int degree, const DenseVector& v);
DenseVector to_dense(const Chain& c, std::size_t size);
DenseVector to_dense(const Cochain& f, std::size_t size);

/// Degree-homogeneous linear map between chain groups, either an explicit
/// sparse matrix or a composition of named operators (applied right to left).
class ChainOperator {
 public:
  static ChainOperator from_matrix(std::string name, int source_degree, int target_degree, SparseMatrix m);
  /// `second` after `first`.
  static ChainOperator compose(const ChainOperator& second, const ChainOperator& first);

  const std::string& name() const { return name_; }
  int source_degree() const { return source_degree_; }
  int target_degree() const { return target_degree_; }
  bool is_composite() const { return !parts_.empty(); }

  Chain operator()(const Chain& c) const;
  /// Materialized matrix (multiplies composites out).
  SparseMatrix matrix() const;

  /// Optional companion homotopy (e.g. D for sd).
  void set_homotopy(std::shared_ptr<const ChainOperator> h) { homotopy_ = std::move(h); }
  const ChainOperator* homotopy() const { return homotopy_.get(); }

 private:
  std::string name_;
  int source_degree_ = 0;
  int target_degree_ = 0;
  SparseMatrix matrix_;
  std::vector<std::shared_ptr<const ChainOperator>> parts_;
  std::shared_ptr<const ChainOperator> homotopy_;
};

}  // namespace ellone
