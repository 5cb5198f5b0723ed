#include "ellone/covering/theta.hpp"

#include "ellone/error.hpp"
#include "ellone/standard_complexes.hpp"

namespace ellone::covering {

Chain cone_sbar(const simplicial::ConeDatum& cone, int n) {
  if (n < 0) throw PreconditionError("s-bar needs at least one group element");
  Chain c(0);
  c.add(static_cast<std::size_t>(cone.apex()), 1);
  for (int i = 0; i < n; ++i) c = cone(c);
  return c;
}

Cochain theta(const simplicial::ConeDatum& cone, const Cochain& f) {
  const OrientedComplex& k = cone.complex();
  validate(k, f);
  const Rational value = kronecker(f, cone_sbar(cone, f.degree()));
  Cochain out(f.degree());
  for (std::size_t idx = 0; idx < k.count(f.degree()); ++idx) out.add(idx, value);
  return out;
}

LineOverCircle::LineOverCircle(int k, Weight weight) : k_(k), weight_(weight), base_(standard::circle(k)) {}

Rational LineOverCircle::h(long x) const {
  if (weight_ == Weight::kIndicator) return (x >= 0 && x < k_) ? 1 : 0;
  const long a = x < 0 ? -x : x;
  return a >= k_ ? Rational(0) : Rational(k_ - a, k_);
}

std::vector<std::pair<long, Rational>> LineOverCircle::partition(long x) const {
  std::vector<std::pair<long, Rational>> out;
  // h(x - g k) vanishes unless |x - g k| < k.
  const long q = x >= 0 ? x / k_ : -((-x + k_ - 1) / k_);
  for (long g = q - 1; g <= q + 1; ++g) {
    Rational w = h(x - g * k_);
    if (w != 0) out.push_back({g, std::move(w)});
  }
  return out;
}

std::pair<std::size_t, int> LineOverCircle::project_edge(long j) const {
  const long r = ((j % k_) + k_) % k_;
  std::vector<int> image{static_cast<int>(r), static_cast<int>((r + 1) % k_)};
  const int sign = sort_with_sign(image);
  return {base_.require_index(image), sign};
}

LineOverCircle::LineChain LineOverCircle::cone_vertex(long v) const {
  LineChain out;
  for (long j = 0; j < v; ++j) out[j] += 1;
  for (long j = v; j < 0; ++j) out[j] -= 1;
  return out;
}

LineOverCircle::LineChain LineOverCircle::sbar(long g0, long g1) const {
  // g0 . T(g0^-1 . s-bar(g1)) = translate the path 0 -> (g1 - g0) k by g0 k.
  LineChain out;
  for (const auto& [j, v] : cone_vertex((g1 - g0) * k_)) out[j + g0 * k_] += v;
  return out;
}

Rational LineOverCircle::evaluate_lift(const Cochain& f, const LineChain& c) const {
  Rational total = 0;
  for (const auto& [j, v] : c) {
    const auto [e, sign] = project_edge(j);
    total += v * sign * f.coefficient(e);
  }
  return total;
}

Cochain LineOverCircle::theta(const Cochain& f) const {
  validate(base_, f);
  Cochain out(f.degree());
  if (f.degree() == 0) {
    // theta(f)(x) = sum_g h(x - g k) f(p(g k)) = f(0).
    for (int v = 0; v < k_; ++v) {
      Rational value = 0;
      for (const auto& [g, w] : partition(v)) value += w * f.coefficient(0);
      out.add(static_cast<std::size_t>(v), value);
    }
  } else if (f.degree() == 1) {
    for (long j = 0; j < k_; ++j) {
      Rational value = 0;
      for (const auto& [g0, w0] : partition(j)) {
        for (const auto& [g1, w1] : partition(j + 1)) value += w0 * w1 * evaluate_lift(f, sbar(g0, g1));
      }
      const auto [e, sign] = project_edge(j);
      out.add(e, sign * value);
    }
  }
  return out;
}

}  // namespace ellone::covering
