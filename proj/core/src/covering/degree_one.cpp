#include "ellone/covering/degree_one.hpp"

#include <deque>
#include <optional>
#include <tuple>

#include "ellone/error.hpp"
#include "ellone/homology.hpp"

namespace ellone::covering {

Cochain integrate_degree1(const OrientedComplex& k, const Cochain& f) {
  validate(k, f);
  if (f.degree() != 1) throw PreconditionError("integration needs a 1-cochain");
  if (!is_cocycle(k, f)) throw PreconditionError("cochain is not a cocycle");
  for (const Chain& z : homology_basis(k, 1)) {
    if (kronecker(f, z) != 0) throw PreconditionError("cochain does not vanish on a homology cycle");
  }
  const int nv = k.vertex_count();
  // adjacency: (neighbour, edge index, +1 if the edge runs from the vertex to the neighbour)
  std::vector<std::vector<std::tuple<int, std::size_t, int>>> adj(static_cast<std::size_t>(nv));
  for (std::size_t e = 0; e < k.count(1); ++e) {
    const Simplex& s = k.simplex(1, e);
    adj[static_cast<std::size_t>(s[0])].push_back({s[1], e, 1});
    adj[static_cast<std::size_t>(s[1])].push_back({s[0], e, -1});
  }
  std::vector<std::optional<Rational>> value(static_cast<std::size_t>(nv));
  value[0] = Rational(0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& [w, e, dir] : adj[static_cast<std::size_t>(u)]) {
      if (value[static_cast<std::size_t>(w)]) continue;
      value[static_cast<std::size_t>(w)] = *value[static_cast<std::size_t>(u)] + dir * f.coefficient(e);
      queue.push_back(w);
    }
  }
  Cochain out(0);
  for (int v = 0; v < nv; ++v) {
    if (!value[static_cast<std::size_t>(v)]) throw PreconditionError("complex is not connected");
    out.add(static_cast<std::size_t>(v), *value[static_cast<std::size_t>(v)]);
  }
  if (!(coboundary(k, out) == f)) throw Error("integrated primitive does not reproduce the cochain");
  return out;
}

AveragedPrimitive average_primitive(const CoveringDatum& c, const BruhatFunction& h, const Cochain& f,
                                    const Cochain& primitive) {
  const OrientedComplex& xt = c.total();
  validate(xt, f);
  validate(xt, primitive);
  if (f.degree() != 1 || primitive.degree() != 0) throw PreconditionError("expected a 1-cochain and a 0-cochain");
  if (!c.is_invariant(f)) throw PreconditionError("cochain is not deck invariant");
  if (!(coboundary(xt, primitive) == f)) throw PreconditionError("primitive does not integrate the cochain");
  const auto& group = c.deck();
  const int nv = xt.vertex_count();
  auto F = [&](int v) { return primitive.coefficient(static_cast<std::size_t>(v)); };
  for (int g = 0; g < group.order(); ++g) {
    const Rational shift = F(c.act_vertex(g, 0)) - F(0);
    for (int x = 1; x < nv; ++x) {
      if (F(c.act_vertex(g, x)) - F(x) != shift) {
        throw PreconditionError("primitive violates F(gy) - F(gx) = F(y) - F(x)");
      }
    }
  }
  const int x0 = c.fundamental_domain().front();
  AveragedPrimitive out{Cochain(0), Cochain(0), Cochain(0)};
  for (int x = 0; x < nv; ++x) {
    Rational value = 0;
    for (int g = 0; g < group.order(); ++g) {
      const Rational w = h(c.act_vertex(group.inverse(g), x));
      if (w != 0) value += w * F(c.act_vertex(g, x0));
    }
    out.averaged.add(static_cast<std::size_t>(x), value);
  }
  out.invariant = primitive - out.averaged;
  if (!c.is_invariant(out.invariant)) throw Error("averaged difference is not invariant");
  out.descended = descend_cochain(c, out.invariant);
  return out;
}

}  // namespace ellone::covering
