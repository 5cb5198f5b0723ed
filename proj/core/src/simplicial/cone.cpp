#include "ellone/simplicial/cone.hpp"

#include <algorithm>

#include "ellone/error.hpp"

namespace ellone::simplicial {

ConeDatum ConeDatum::make(std::shared_ptr<const OrientedComplex> k, int apex) {
  if (apex < 0 || apex >= k->vertex_count()) throw PreconditionError("apex is not a vertex");
  for (int d = 0; d <= k->dimension(); ++d) {
    for (const Simplex& s : k->simplices(d)) {
      if (std::find(s.begin(), s.end(), apex) != s.end()) continue;
      Simplex t = s;
      t.push_back(apex);
      std::sort(t.begin(), t.end());
      if (!k->contains(t)) throw PreconditionError("complex is not a cone over the declared apex");
    }
  }
  ConeDatum out;
  out.complex_ = std::move(k);
  out.apex_ = apex;
  return out;
}

Chain ConeDatum::operator()(const Chain& c) const {
  Chain out(c.degree() + 1);
  if (c.degree() == -1) {
    out.add(static_cast<std::size_t>(apex_), c.coefficient(0));
    return out;
  }
  validate(*complex_, c);
  for (const auto& [idx, value] : c) {
    std::vector<int> t = complex_->simplex(c.degree(), idx);
    t.insert(t.begin(), apex_);
    const int sign = sort_with_sign(t);
    if (sign == 0) continue;
    out.add(complex_->require_index(t), sign * value);
  }
  return out;
}

ChainOperator ConeDatum::as_operator(int n) const {
  const std::size_t cols = n == -1 ? 1 : complex_->count(n);
  SparseMatrix m(n + 1 <= complex_->dimension() ? complex_->count(n + 1) : 0, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Chain e(n);
    e.add(j, 1);
    for (const auto& [i, v] : (*this)(e)) m.add(i, j, v);
  }
  return ChainOperator::from_matrix("T", n, n + 1, std::move(m));
}

}  // namespace ellone::simplicial
