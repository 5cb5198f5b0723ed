#include "ellone/simplicial/affine_chains.hpp"

#include <set>

#include "ellone/error.hpp"

namespace ellone::simplicial {

AffineChain affine_boundary(const AffineSimplex& s) {
  AffineChain out(static_cast<int>(s.size()) - 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    AffineSimplex f;
    f.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != i) f.push_back(s[j]);
    }
    out.add(f, (i % 2 == 0) ? 1 : -1);
  }
  return out;
}

AffineChainModel::AffineChainModel(std::shared_ptr<const OrientedComplex> k) : complex_(std::move(k)) {
  for (int v = 0; v < complex_->vertex_count(); ++v) intern({{v, Rational(1)}});
}

PointId AffineChainModel::vertex(int v) const {
  if (v < 0 || v >= complex_->vertex_count()) throw PreconditionError("vertex id out of range");
  return static_cast<PointId>(v);
}

PointId AffineChainModel::intern(Coordinates coords) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = ids_.find(coords);
  if (it != ids_.end()) return it->second;
  Simplex support;
  Rational total = 0;
  for (const auto& [v, w] : coords) {
    if (w <= 0) throw PreconditionError("barycentric weights must be positive");
    support.push_back(v);
    total += w;
  }
  if (total != 1) throw PreconditionError("barycentric weights must sum to one");
  const auto index = complex_->index_of(support);
  if (!index) throw PreconditionError("point support is not a simplex of the complex");
  const auto id = static_cast<PointId>(points_.size());
  points_.push_back({coords, {static_cast<int>(support.size()) - 1, *index}});
  ids_.emplace(std::move(coords), id);
  return id;
}

Coordinates AffineChainModel::coordinates(PointId p) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return points_.at(p).coords;
}

SimplexRef AffineChainModel::support(PointId p) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return points_.at(p).support;
}

std::size_t AffineChainModel::point_count() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return points_.size();
}

PointId AffineChainModel::barycenter(const AffineSimplex& s) const {
  if (s.empty()) throw PreconditionError("barycenter of the empty simplex");
  std::map<int, Rational> weights;
  const Rational share(1, static_cast<long>(s.size()));
  for (PointId p : s) {
    for (const auto& [v, w] : coordinates(p)) weights[v] += w * share;
  }
  return intern(Coordinates(weights.begin(), weights.end()));
}

std::optional<SimplexRef> AffineChainModel::carrier(const AffineSimplex& s) const {
  std::set<int> vertices;
  for (PointId p : s) {
    for (const auto& [v, w] : coordinates(p)) vertices.insert(v);
  }
  if (vertices.empty()) return std::nullopt;
  const Simplex simplex(vertices.begin(), vertices.end());
  const auto index = complex_->index_of(simplex);
  if (!index) return std::nullopt;
  return SimplexRef{static_cast<int>(simplex.size()) - 1, *index};
}

AffineSimplex AffineChainModel::embed(const Simplex& s) const {
  AffineSimplex out;
  for (int v : s) out.push_back(vertex(v));
  return out;
}

AffineChain AffineChainModel::embed(const Chain& c) const {
  validate(*complex_, c);
  AffineChain out(c.degree());
  for (const auto& [idx, value] : c) out.add(embed(complex_->simplex(c.degree(), idx)), value);
  return out;
}

AffineChain AffineChainModel::boundary(const AffineChain& c) const {
  AffineChain out(c.degree() - 1);
  for (const auto& [s, value] : c) {
    for (const auto& [f, sign] : affine_boundary(s)) out.add(f, sign * value);
  }
  return out;
}

AffineChain AffineChainModel::cone(PointId apex, const AffineChain& c) const {
  AffineChain out(c.degree() + 1);
  for (const auto& [s, value] : c) {
    AffineSimplex t;
    t.reserve(s.size() + 1);
    t.push_back(apex);
    t.insert(t.end(), s.begin(), s.end());
    out.add(t, value);
  }
  return out;
}

AffineChain AffineChainModel::sd_simplex(const AffineSimplex& s) const {
  if (s.size() <= 1) {
    AffineChain out(static_cast<int>(s.size()) - 1);
    out.add(s, 1);
    return out;
  }
  return cone(barycenter(s), sd(affine_boundary(s)));
}

AffineChain AffineChainModel::sd(const AffineChain& c) const {
  AffineChain out(c.degree());
  for (const auto& [s, value] : c) {
    for (const auto& [piece, coeff] : sd_simplex(s)) out.add(piece, coeff * value);
  }
  return out;
}

AffineChain AffineChainModel::sd_power(const AffineChain& c, int times) const {
  AffineChain out = c;
  for (int i = 0; i < times; ++i) out = sd(out);
  return out;
}

AffineChain AffineChainModel::prism_simplex(const AffineSimplex& s) const {
  if (s.empty()) return AffineChain(0);
  AffineChain inner = prism(affine_boundary(s));
  AffineChain self(static_cast<int>(s.size()) - 1);
  self.add(s, 1);
  inner += self;
  return Rational(-1) * cone(barycenter(s), inner);
}

AffineChain AffineChainModel::prism(const AffineChain& c) const {
  AffineChain out(c.degree() + 1);
  for (const auto& [s, value] : c) {
    for (const auto& [piece, coeff] : prism_simplex(s)) out.add(piece, coeff * value);
  }
  return out;
}

}  // namespace ellone::simplicial
