#include "ellone/seminorm/fundamental_class.hpp"

#include <deque>

namespace ellone::seminorm {

FundamentalClass fundamental_class(const OrientedComplex& k) {
  const int n = k.dimension();
  if (n < 1) throw PreconditionError("fundamental class needs dimension at least one");
  for (const SimplexRef& m : k.maximal_simplices()) {
    if (m.dim != n) throw PreconditionError("complex is not pure");
  }
  // cofaces[f] = (top simplex, position of the face in it)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cofaces(k.count(n - 1));
  for (std::size_t t = 0; t < k.count(n); ++t) {
    const auto faces = k.face_indices(n, t);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      cofaces[faces[i]].push_back({t, i});
      if (cofaces[faces[i]].size() > 2) throw PreconditionError("a codimension-one face has more than two cofaces");
    }
  }
  FundamentalClass out;
  out.orientation.assign(k.count(n), 0);
  for (std::size_t root = 0; root < k.count(n); ++root) {
    if (out.orientation[root] != 0) continue;
    out.orientation[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t t = queue.front();
      queue.pop_front();
      const auto faces = k.face_indices(n, t);
      for (std::size_t i = 0; i < faces.size(); ++i) {
        for (const auto& [u, j] : cofaces[faces[i]]) {
          if (u == t) continue;
          // Induced face signs must cancel: o_t (-1)^i + o_u (-1)^j = 0.
          const int want = -out.orientation[t] * ((i + j) % 2 == 0 ? 1 : -1);
          if (out.orientation[u] == 0) {
            out.orientation[u] = want;
            out.witness.push_back({t, u, faces[i]});
            queue.push_back(u);
          } else if (out.orientation[u] != want) {
            throw NonOrientableError("complex is not orientable");
          }
        }
      }
    }
  }
  for (const auto& c : cofaces) {
    if (c.size() != 2) throw PreconditionError("complex has boundary: a codimension-one face has one coface");
  }
  out.cycle = Chain(n);
  for (std::size_t t = 0; t < k.count(n); ++t) out.cycle.add(t, out.orientation[t]);
  return out;
}

}  // namespace ellone::seminorm
