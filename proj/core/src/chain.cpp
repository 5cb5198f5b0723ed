#include "ellone/chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "ellone/error.hpp"

namespace ellone {
namespace {

template <class G>
void validate_indices(const OrientedComplex& k, const G& g, const char* what) {
  if (g.degree() < 0 || g.degree() > k.dimension()) {
    if (g.is_zero() && g.degree() >= -1) return;
    throw PreconditionError(std::string(what) + " degree " + std::to_string(g.degree()) +
                            " out of range for a complex of dimension " + std::to_string(k.dimension()));
  }
  const std::size_t n = k.count(g.degree());
  for (const auto& [idx, value] : g) {
    if (idx >= n) {
      throw PreconditionError(std::string(what) + " index " + std::to_string(idx) + " out of range in degree " +
                              std::to_string(g.degree()));
    }
  }
}

}  // namespace

void validate(const OrientedComplex& k, const Chain& c) { validate_indices(k, c, "chain"); }
void validate(const OrientedComplex& k, const Cochain& f) { validate_indices(k, f, "cochain"); }

Chain boundary(const OrientedComplex& k, const Chain& c, Augmentation aug) {
  const int n = c.degree();
  if (n < 0 || n > k.dimension()) {
    throw PreconditionError("boundary: degree " + std::to_string(n) + " out of range");
  }
  if (n == 0) {
    if (aug == Augmentation::kOff) {
      throw PreconditionError("boundary of a 0-chain requires augmented mode");
    }
    validate(k, c);
    Rational total = 0;
    for (const auto& [idx, value] : c) total += value;
    Chain out(-1);
    out.add(0, total);
    return out;
  }
  validate(k, c);
  Chain out(n - 1);
  for (const auto& [idx, value] : c) {
    const auto faces = k.face_indices(n, idx);
    for (std::size_t i = 0; i < faces.size(); ++i) out.add(faces[i], (i % 2 == 0) ? value : -value);
  }
  return out;
}

Cochain coboundary(const OrientedComplex& k, const Cochain& f, Augmentation aug) {
  const int n = f.degree();
  if (n == -1 && aug == Augmentation::kOn) {
    const Rational t = f.coefficient(0);
    Cochain out(0);
    for (std::size_t v = 0; v < k.count(0); ++v) out.add(v, t);
    return out;
  }
  if (n < 0 || n > k.dimension()) {
    throw PreconditionError("coboundary: degree " + std::to_string(n) + " out of range");
  }
  validate(k, f);
  Cochain out(n + 1);
  if (f.is_zero()) return out;
  for (std::size_t idx = 0; idx < k.count(n + 1); ++idx) {
    const auto faces = k.face_indices(n + 1, idx);
    Rational value = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const Rational fv = f.coefficient(faces[i]);
      if (fv != 0) value += (i % 2 == 0) ? fv : -fv;
    }
    out.add(idx, value);
  }
  return out;
}

Rational kronecker(const Cochain& f, const Chain& c) {
  if (f.degree() != c.degree()) {
    throw std::invalid_argument("kronecker: degree mismatch " + std::to_string(f.degree()) + " vs " +
                                std::to_string(c.degree()));
  }
  Rational total = 0;
  const auto& small = f.size() < c.size() ? f.coeffs() : c.coeffs();
  const auto& large = f.size() < c.size() ? c.coeffs() : f.coeffs();
  for (const auto& [idx, value] : small) {
    auto it = large.find(idx);
    if (it != large.end()) total += value * it->second;
  }
  return total;
}

Rational l1_norm(const Chain& c) {
  Rational total = 0;
  for (const auto& [idx, value] : c) total += abs(value);
  return total;
}

Rational linf_norm(const Cochain& f) {
  Rational best = 0;
  for (const auto& [idx, value] : f) best = std::max(best, Rational(abs(value)));
  return best;
}

SparseMatrix boundary_matrix(const OrientedComplex& k, int n, Augmentation aug) {
  if (n < 0 || n > k.dimension() + 1) throw PreconditionError("boundary_matrix: degree out of range");
  if (n == 0) {
    SparseMatrix m(aug == Augmentation::kOn ? 1 : 0, k.count(0));
    if (aug == Augmentation::kOn) {
      for (std::size_t v = 0; v < k.count(0); ++v) m.add(0, v, 1);
    }
    return m;
  }
  SparseMatrix m(k.count(n - 1), k.count(n));
  for (std::size_t idx = 0; idx < k.count(n); ++idx) {
    const auto faces = k.face_indices(n, idx);
    for (std::size_t i = 0; i < faces.size(); ++i) m.add(faces[i], idx, (i % 2 == 0) ? 1 : -1);
  }
  return m;
}

Chain chain_from_dense(int degree, const DenseVector& v) {
  Chain c(degree);
  for (std::size_t i = 0; i < v.size(); ++i) c.add(i, v[i]);
  return c;
}

Cochain cochain_from_dense(int degree, const DenseVector& v) {
  Cochain f(degree);
  for (std::size_t i = 0; i < v.size(); ++i) f.add(i, v[i]);
  return f;
}

DenseVector to_dense(const Chain& c, std::size_t size) {
  DenseVector v(size);
  for (const auto& [idx, value] : c) v.at(idx) = value;
  return v;
}

DenseVector to_dense(const Cochain& f, std::size_t size) {
  DenseVector v(size);
  for (const auto& [idx, value] : f) v.at(idx) = value;
  return v;
}

ChainOperator ChainOperator::from_matrix(std::string name, int source_degree, int target_degree, SparseMatrix m) {
  ChainOperator op;
  op.name_ = std::move(name);
  op.source_degree_ = source_degree;
  op.target_degree_ = target_degree;
  op.matrix_ = std::move(m);
  return op;
}

ChainOperator ChainOperator::compose(const ChainOperator& second, const ChainOperator& first) {
  if (second.source_degree_ != first.target_degree_) {
    throw std::invalid_argument("ChainOperator::compose: degree mismatch between " + first.name_ + " and " +
                                second.name_);
  }
  ChainOperator op;
  op.name_ = second.name_ + " o " + first.name_;
  op.source_degree_ = first.source_degree_;
  op.target_degree_ = second.target_degree_;
  op.parts_ = {std::make_shared<const ChainOperator>(first), std::make_shared<const ChainOperator>(second)};
  return op;
}

Chain ChainOperator::operator()(const Chain& c) const {
  if (c.degree() != source_degree_ && !c.is_zero()) {
    throw std::invalid_argument(name_ + ": expected a degree " + std::to_string(source_degree_) + " chain");
  }
  if (!parts_.empty()) {
    Chain out = c;
    for (const auto& part : parts_) out = (*part)(out);
    return out;
  }
  Chain out(target_degree_);
  for (const auto& [idx, value] : c) {
    for (const auto& [row, entry] : matrix_.columns.at(idx)) out.add(row, entry * value);
  }
  return out;
}

SparseMatrix ChainOperator::matrix() const {
  if (parts_.empty()) return matrix_;
  SparseMatrix m = parts_.front()->matrix();
  for (std::size_t i = 1; i < parts_.size(); ++i) m = parts_[i]->matrix().multiply(m);
  return m;
}

}  // namespace ellone
