#include "ellone/covering/covering.hpp"

#include <algorithm>
#include <set>

#include "ellone/error.hpp"
#include "ellone/io.hpp"

namespace ellone::covering {

CoveringDatum CoveringDatum::make(OrientedComplex base, OrientedComplex total, std::vector<int> projection,
                                  const std::vector<std::vector<int>>& deck_generators,
                                  std::vector<int> fundamental_domain, int order_cap) {
  CoveringDatum c;
  c.base_ = std::make_shared<const OrientedComplex>(std::move(base));
  c.total_ = std::make_shared<const OrientedComplex>(std::move(total));
  c.projection_ = std::move(projection);
  c.generators_ = deck_generators;
  c.domain_ = std::move(fundamental_domain);
  const OrientedComplex& x = *c.base_;
  const OrientedComplex& xt = *c.total_;
  const int nv = xt.vertex_count();
  if (static_cast<int>(c.projection_.size()) != nv) throw PreconditionError("projection needs one entry per vertex");
  for (int v : c.projection_) {
    if (v < 0 || v >= x.vertex_count()) throw PreconditionError("projection leaves the base");
  }
  for (int d = 0; d <= xt.dimension(); ++d) {
    for (const Simplex& s : xt.simplices(d)) {
      Simplex image;
      for (int v : s) image.push_back(c.projection_[static_cast<std::size_t>(v)]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
        throw PreconditionError("projection is not injective on a simplex");
      }
      if (!x.contains(image)) throw PreconditionError("projection is not simplicial");
    }
  }
  c.deck_ = deck_generators.empty() ? groupcoh::FiniteGroup::from_permutations(std::max(nv, 1), {}, order_cap)
                                    : groupcoh::FiniteGroup::from_permutations(nv, deck_generators, order_cap);
  for (int g = 0; g < c.deck_.order(); ++g) {
    const auto& perm = c.deck_.permutations()[static_cast<std::size_t>(g)];
    for (int v = 0; v < nv; ++v) {
      if (c.projection_[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] != c.projection_[static_cast<std::size_t>(v)]) {
        throw PreconditionError("deck transformation does not commute with the projection");
      }
      if (g != c.deck_.identity() && perm[static_cast<std::size_t>(v)] == v) {
        throw PreconditionError("deck group does not act freely on vertices");
      }
    }
    for (int d = 1; d <= xt.dimension(); ++d) {
      for (const Simplex& s : xt.simplices(d)) {
        Simplex image;
        for (int v : s) image.push_back(perm[static_cast<std::size_t>(v)]);
        if (!std::is_sorted(image.begin(), image.end())) {
          throw PreconditionError("deck transformation does not preserve the vertex order of a simplex");
        }
        if (!xt.contains(image)) throw PreconditionError("deck transformation is not simplicial");
      }
    }
  }
  // Fibres are orbits; each orbit meets the domain once.
  std::vector<int> fibre_size(static_cast<std::size_t>(x.vertex_count()), 0);
  for (int v : c.projection_) ++fibre_size[static_cast<std::size_t>(v)];
  for (int s : fibre_size) {
    if (s != c.deck_.order()) throw PreconditionError("fibres are not single deck orbits");
  }
  c.domain_element_.assign(static_cast<std::size_t>(nv), -1);
  std::set<int> seen_orbits;
  for (int r : c.domain_) {
    if (r < 0 || r >= nv) throw PreconditionError("fundamental domain vertex out of range");
    if (!seen_orbits.insert(c.projection_[static_cast<std::size_t>(r)]).second) {
      throw PreconditionError("fundamental domain meets an orbit twice");
    }
    for (int g = 0; g < c.deck_.order(); ++g) c.domain_element_[static_cast<std::size_t>(c.act_vertex(g, r))] = g;
  }
  if (static_cast<int>(seen_orbits.size()) != x.vertex_count()) {
    throw PreconditionError("fundamental domain misses an orbit");
  }
  return c;
}

CoveringDatum CoveringDatum::from_json(const nlohmann::ordered_json& j) {
  try {
    return make(io::complex_from_json(j.at("base")), io::complex_from_json(j.at("total")),
                j.at("projection").get<std::vector<int>>(),
                j.value("deck_generators", std::vector<std::vector<int>>{}),
                j.at("fundamental_domain").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed covering: ") + e.what(), 0, 0);
  }
}

std::size_t CoveringDatum::act_simplex(int g, int dim, std::size_t index) const {
  Simplex image;
  for (int v : total_->simplex(dim, index)) image.push_back(act_vertex(g, v));
  return total_->require_index(image);
}

Cochain CoveringDatum::act(int g, const Cochain& f) const {
  Cochain out(f.degree());
  // (g.f)(g s) = f(s)
  for (const auto& [idx, v] : f) out.add(act_simplex(g, f.degree(), idx), v);
  return out;
}

Chain CoveringDatum::act(int g, const Chain& c) const {
  Chain out(c.degree());
  for (const auto& [idx, v] : c) out.add(act_simplex(g, c.degree(), idx), v);
  return out;
}

bool CoveringDatum::is_invariant(const Cochain& f) const {
  for (int g = 0; g < deck_.order(); ++g) {
    if (!(act(g, f) == f)) return false;
  }
  return true;
}

std::pair<std::size_t, int> CoveringDatum::project_simplex(int dim, std::size_t index) const {
  std::vector<int> image;
  for (int v : total_->simplex(dim, index)) image.push_back(projection_[static_cast<std::size_t>(v)]);
  const int sign = sort_with_sign(image);
  return {base_->require_index(image), sign};
}

std::size_t CoveringDatum::lift_simplex(int dim, std::size_t base_index) const {
  const Simplex& s = base_->simplex(dim, base_index);
  for (std::size_t idx = 0; idx < total_->count(dim); ++idx) {
    const Simplex& t = total_->simplex(dim, idx);
    if (domain_element(t.front()) != deck_.identity()) continue;
    Simplex image;
    for (int v : t) image.push_back(projection_[static_cast<std::size_t>(v)]);
    std::sort(image.begin(), image.end());
    if (image == s) return idx;
  }
  // The first vertex of the lift need not be the domain vertex; translate any lift.
  for (std::size_t idx = 0; idx < total_->count(dim); ++idx) {
    if (project_simplex(dim, idx).first == base_index) {
      const int g = domain_element(total_->simplex(dim, idx).front());
      return act_simplex(deck_.inverse(g), dim, idx);
    }
  }
  throw PreconditionError("base simplex has no lift");
}

nlohmann::ordered_json CoveringDatum::to_json() const {
  nlohmann::ordered_json j;
  j["base"] = io::complex_to_json(*base_);
  j["total"] = io::complex_to_json(*total_);
  j["projection"] = projection_;
  j["deck_generators"] = generators_;
  j["fundamental_domain"] = domain_;
  return j;
}

Cochain lift_cochain(const CoveringDatum& c, const Cochain& f) {
  validate(c.base(), f);
  Cochain out(f.degree());
  for (std::size_t idx = 0; idx < c.total().count(f.degree()); ++idx) {
    const auto [b, sign] = c.project_simplex(f.degree(), idx);
    out.add(idx, sign * f.coefficient(b));
  }
  return out;
}

Cochain descend_cochain(const CoveringDatum& c, const Cochain& f) {
  if (!c.is_invariant(f)) throw PreconditionError("cochain is not deck invariant");
  Cochain out(f.degree());
  for (std::size_t b = 0; b < c.base().count(f.degree()); ++b) {
    const std::size_t t = c.lift_simplex(f.degree(), b);
    out.add(b, c.project_simplex(f.degree(), t).second * f.coefficient(t));
  }
  return out;
}

BruhatFunction bruhat(const CoveringDatum& c) {
  BruhatFunction h{std::vector<Rational>(static_cast<std::size_t>(c.total().vertex_count()), Rational(0))};
  for (int v : c.fundamental_domain()) h.values[static_cast<std::size_t>(v)] = 1;
  return h;
}

bool satisfies_partition(const CoveringDatum& c, const BruhatFunction& h) {
  for (int v = 0; v < c.total().vertex_count(); ++v) {
    Rational total = 0;
    for (int g = 0; g < c.deck().order(); ++g) total += h(c.act_vertex(g, v));
    if (total != 1) return false;
  }
  return true;
}

}  // namespace ellone::covering
