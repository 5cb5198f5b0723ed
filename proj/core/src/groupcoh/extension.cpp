#include "ellone/groupcoh/extension.hpp"

#include "ellone/error.hpp"

namespace ellone::groupcoh {

DenseVector to_vector(const BarCochain& f) { return f.values(); }

BarCochain from_vector(int order, int degree, const DenseVector& v) {
  BarCochain out(order, degree);
  if (v.size() != out.size()) throw PreconditionError("vector length does not match bar degree");
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

StrongResolution bar_resolution(const FiniteGroup& group, std::vector<Rational> mu) {
  const ContractingHomotopy k = mu.empty() ? ContractingHomotopy(group) : ContractingHomotopy(group, std::move(mu));
  const int order = group.order();
  StrongResolution e;
  e.group = &group;
  e.dimension = [order](int n) { return BarCochain(order, n).size(); };
  e.act = [&group, order](int n, int g, const DenseVector& v) {
    return to_vector(act(group, g, from_vector(order, n, v)));
  };
  e.differential = [order](int n, const DenseVector& v) {
    return to_vector(bar_differential(from_vector(order, n, v)));
  };
  e.homotopy = [order, k](int n, const DenseVector& v) { return to_vector(k(from_vector(order, n, v))); };
  e.norm = [order](int n, const DenseVector& v) { return sup_norm(from_vector(order, n, v)); };
  return e;
}

BarCochain extend_to_bar(const StrongResolution& e, int n, const DenseVector& v) {
  if (!e.homotopy) throw PreconditionError("resolution declares no contracting homotopy");
  const FiniteGroup& group = *e.group;
  const int order = group.order();
  if (n == -1) return from_vector(order, -1, v);
  BarCochain out(order, n);
  const std::size_t block = out.size() / static_cast<std::size_t>(order);
  for (int g0 = 0; g0 < order; ++g0) {
    const DenseVector lowered = e.act(n, group.inverse(g0), v);
    const DenseVector w = e.act(n - 1, g0, e.homotopy(n, lowered));
    const BarCochain inner = extend_to_bar(e, n - 1, w);
    for (std::size_t idx = 0; idx < block; ++idx) out[static_cast<std::size_t>(g0) * block + idx] = inner[idx];
  }
  return out;
}

}  // namespace ellone::groupcoh
