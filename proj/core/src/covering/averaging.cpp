#include "ellone/covering/averaging.hpp"

#include "ellone/error.hpp"

namespace ellone::covering {

void check_left_inverse(const ExtensionProblem& p) {
  for (std::size_t i = 0; i < p.dim_a; ++i) {
    DenseVector e(p.dim_a);
    e[i] = 1;
    if (p.sigma(p.iota(e)) != e) throw PreconditionError("sigma is not a left inverse of iota");
  }
}

Cochain equivariant_extend(const CoveringDatum& c, const BruhatFunction& h, const ExtensionProblem& p,
                           const DenseVector& b) {
  const OrientedComplex& xt = c.total();
  const auto& group = c.deck();
  // alpha(g sigma(g^-1 b)) for each g with some nonzero weight.
  std::vector<std::optional<Cochain>> images(static_cast<std::size_t>(group.order()));
  auto image = [&](int g) -> const Cochain& {
    auto& slot = images[static_cast<std::size_t>(g)];
    if (!slot) slot = p.alpha(p.act_a(g, p.sigma(p.act_b(group.inverse(g), b))));
    return *slot;
  };
  Cochain out(p.degree);
  for (std::size_t idx = 0; idx < xt.count(p.degree); ++idx) {
    const int first = xt.simplex(p.degree, idx).front();
    Rational value = 0;
    for (int g = 0; g < group.order(); ++g) {
      const Rational w = h(c.act_vertex(group.inverse(g), first));
      if (w != 0) value += w * image(g).coefficient(idx);
    }
    out.add(idx, value);
  }
  return out;
}

Cochain bar_to_cochains(const CoveringDatum& c, const BruhatFunction& h, const groupcoh::BarCochain& f) {
  const OrientedComplex& xt = c.total();
  const auto& group = c.deck();
  const int n = f.degree();
  if (f.order() != group.order()) throw PreconditionError("bar cochain is over a different group");
  Cochain out(n);
  for (std::size_t idx = 0; idx < xt.count(n); ++idx) {
    const Simplex& s = xt.simplex(n, idx);
    // Nonzero weights per vertex.
    std::vector<std::vector<std::pair<int, Rational>>> weights(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (int g = 0; g < group.order(); ++g) {
        Rational w = h(c.act_vertex(group.inverse(g), s[i]));
        if (w != 0) weights[i].push_back({g, std::move(w)});
      }
    }
    bool empty = false;
    for (const auto& w : weights) empty = empty || w.empty();
    if (empty) continue;
    Rational value = 0;
    std::vector<std::size_t> pos(s.size(), 0);
    std::vector<int> tuple(s.size());
    for (;;) {
      Rational w = 1;
      for (std::size_t i = 0; i < s.size(); ++i) {
        tuple[i] = weights[i][pos[i]].first;
        w *= weights[i][pos[i]].second;
      }
      value += w * f.at(tuple);
      std::size_t i = 0;
      while (i < s.size() && ++pos[i] == weights[i].size()) pos[i++] = 0;
      if (i == s.size()) break;
    }
    out.add(idx, value);
  }
  return out;
}

}  // namespace ellone::covering
