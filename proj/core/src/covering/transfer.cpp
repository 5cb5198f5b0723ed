#include "ellone/covering/transfer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ellone/error.hpp"
#include "ellone/homology.hpp"
#include "ellone/io.hpp"
#include "ellone/seminorm/seminorm.hpp"

namespace ellone::covering {

IsometryGroupDatum IsometryGroupDatum::make(OrientedComplex total, const std::vector<std::vector<int>>& generators,
                                            const std::vector<std::vector<int>>& subgroup_generators,
                                            int order_cap) {
  IsometryGroupDatum d;
  d.total_ = std::move(total);
  d.generators_ = generators;
  d.subgroup_generators_ = subgroup_generators;
  const int nv = d.total_.vertex_count();
  d.group_ = groupcoh::FiniteGroup::from_permutations(nv, generators, order_cap);
  const auto& perms = d.group_.permutations();
  for (const auto& perm : perms) {
    for (int dim = 1; dim <= d.total_.dimension(); ++dim) {
      for (const Simplex& s : d.total_.simplices(dim)) {
        Simplex image;
        for (int v : s) image.push_back(perm[static_cast<std::size_t>(v)]);
        std::sort(image.begin(), image.end());
        if (!d.total_.contains(image)) throw PreconditionError("group element is not a simplicial automorphism");
      }
    }
  }
  const auto sub = groupcoh::FiniteGroup::from_permutations(nv, subgroup_generators, order_cap);
  for (const auto& p : sub.permutations()) {
    const auto it = std::find(perms.begin(), perms.end(), p);
    if (it == perms.end()) throw PreconditionError("subgroup element is not in the group");
    const int g = static_cast<int>(it - perms.begin());
    if (g != d.group_.identity()) {
      for (int v = 0; v < nv; ++v) {
        if (p[static_cast<std::size_t>(v)] == v) throw PreconditionError("subgroup does not act freely on vertices");
      }
    }
    d.subgroup_.push_back(g);
  }
  std::sort(d.subgroup_.begin(), d.subgroup_.end());
  // One representative per right coset Gamma g, smallest index first.
  std::set<int> covered;
  for (int g = 0; g < d.group_.order(); ++g) {
    if (covered.count(g)) continue;
    d.representatives_.push_back(g);
    for (int s : d.subgroup_) covered.insert(d.group_.multiply(s, g));
  }
  return d;
}

IsometryGroupDatum IsometryGroupDatum::from_json(const nlohmann::ordered_json& j) {
  try {
    return make(io::complex_from_json(j.at("total")), j.at("generators").get<std::vector<std::vector<int>>>(),
                j.value("subgroup_generators", std::vector<std::vector<int>>{}));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed isometry datum: ") + e.what(), 0, 0);
  }
}

std::pair<std::size_t, int> IsometryGroupDatum::act_simplex(int g, int dim, std::size_t index) const {
  const auto& perm = group_.permutations()[static_cast<std::size_t>(g)];
  std::vector<int> image;
  for (int v : total_.simplex(dim, index)) image.push_back(perm[static_cast<std::size_t>(v)]);
  const int sign = sort_with_sign(image);
  return {total_.require_index(image), sign};
}

Cochain IsometryGroupDatum::act(int g, const Cochain& f) const {
  Cochain out(f.degree());
  // (g.f)(g.s) = f(s)
  for (const auto& [idx, v] : f) {
    const auto [image, sign] = act_simplex(g, f.degree(), idx);
    out.add(image, sign * v);
  }
  return out;
}

bool IsometryGroupDatum::is_invariant(const Cochain& f, const std::vector<int>& elements) const {
  for (int g : elements) {
    if (!(act(g, f) == f)) return false;
  }
  return true;
}

bool IsometryGroupDatum::is_g_invariant(const Cochain& f) const {
  std::vector<int> all(static_cast<std::size_t>(group_.order()));
  for (int g = 0; g < group_.order(); ++g) all[static_cast<std::size_t>(g)] = g;
  return is_invariant(f, all);
}

bool IsometryGroupDatum::is_gamma_invariant(const Cochain& f) const { return is_invariant(f, subgroup_); }

std::vector<Cochain> IsometryGroupDatum::invariant_basis(int n, const std::vector<int>& elements) const {
  std::vector<Cochain> out;
  if (n < 0 || n > total_.dimension()) return out;
  std::vector<char> seen(total_.count(n), 0);
  for (std::size_t root = 0; root < total_.count(n); ++root) {
    if (seen[root]) continue;
    // value(g.t) = sign(g, t) value(t)
    std::map<std::size_t, int> value{{root, 1}};
    std::deque<std::size_t> queue{root};
    bool conflict = false;
    while (!queue.empty()) {
      const std::size_t t = queue.front();
      queue.pop_front();
      for (int g : elements) {
        const auto [image, sign] = act_simplex(g, n, t);
        const int want = sign * value.at(t);
        const auto [it, inserted] = value.emplace(image, want);
        if (inserted) {
          queue.push_back(image);
        } else if (it->second != want) {
          conflict = true;
        }
      }
    }
    Cochain b(n);
    for (const auto& [t, v] : value) {
      seen[t] = 1;
      b.add(t, v);
    }
    if (!conflict) out.push_back(std::move(b));
  }
  return out;
}

nlohmann::ordered_json IsometryGroupDatum::to_json() const {
  nlohmann::ordered_json j;
  j["total"] = io::complex_to_json(total_);
  j["generators"] = generators_;
  j["subgroup_generators"] = subgroup_generators_;
  return j;
}

Cochain transfer(const IsometryGroupDatum& d, const Cochain& f) {
  validate(d.total(), f);
  if (!d.is_gamma_invariant(f)) throw PreconditionError("cochain is not invariant under the subgroup");
  const Rational weight(1, static_cast<long>(d.representatives().size()));
  Cochain out(f.degree());
  for (std::size_t idx = 0; idx < d.total().count(f.degree()); ++idx) {
    Rational value = 0;
    for (int g : d.representatives()) {
      const auto [image, sign] = d.act_simplex(g, f.degree(), idx);
      value += sign * f.coefficient(image);
    }
    out.add(idx, weight * value);
  }
  return out;
}

Cochain restriction(const IsometryGroupDatum& d, const Cochain& f) {
  validate(d.total(), f);
  if (!d.is_g_invariant(f)) throw PreconditionError("cochain is not invariant under the group");
  return f;
}

namespace {

seminorm::LinfMinimum invariant_seminorm(const IsometryGroupDatum& d, const Cochain& f,
                                         const std::vector<int>& elements, seminorm::PivotRule rule) {
  const OrientedComplex& k = d.total();
  const std::size_t cn = k.count(f.degree());
  std::vector<DenseVector> directions;
  for (const Cochain& b : d.invariant_basis(f.degree() - 1, elements)) {
    directions.push_back(to_dense(coboundary(k, b), cn));
  }
  return seminorm::linf_minimize(to_dense(f, cn), directions, rule);
}

}  // namespace

IsometryReport res_isometry_check(const IsometryGroupDatum& d, const Cochain& f, seminorm::PivotRule rule) {
  validate(d.total(), f);
  if (!d.is_g_invariant(f)) throw PreconditionError("cochain is not invariant under the group");
  if (!is_cocycle(d.total(), f)) throw PreconditionError("cochain is not a cocycle");
  std::vector<int> all(static_cast<std::size_t>(d.group().order()));
  for (int g = 0; g < d.group().order(); ++g) all[static_cast<std::size_t>(g)] = g;
  auto big = invariant_seminorm(d, f, all, rule);
  auto small = invariant_seminorm(d, restriction(d, f), d.subgroup(), rule);
  IsometryReport out;
  out.g_seminorm = big.value;
  out.gamma_seminorm = small.value;
  out.equal = out.g_seminorm == out.gamma_seminorm;
  out.g_certificate = std::move(big.certificate);
  out.gamma_certificate = std::move(small.certificate);
  return out;
}

}  // namespace ellone::covering
