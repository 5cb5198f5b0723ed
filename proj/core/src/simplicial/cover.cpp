#include "ellone/simplicial/cover.hpp"

#include <algorithm>

#include "ellone/error.hpp"

namespace ellone::simplicial {

namespace {

bool has_face(const Simplex& s, const Simplex& f) {
  std::size_t j = 0;
  for (int v : s) {
    if (j < f.size() && f[j] == v) ++j;
  }
  return j == f.size();
}

}  // namespace

OpenCover OpenCover::from_generators(const OrientedComplex& k, std::vector<std::string> names,
                                     const std::vector<std::vector<Simplex>>& generators) {
  if (names.size() != generators.size()) throw PreconditionError("cover names and sets differ in number");
  OpenCover cover;
  cover.complex_ = std::make_shared<const OrientedComplex>(k);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    Set set{std::move(names[i]), std::vector<char>(k.total_count(), 0)};
    for (Simplex g : generators[i]) {
      std::sort(g.begin(), g.end());
      k.require_index(g);
      for (int d = static_cast<int>(g.size()) - 1; d <= k.dimension(); ++d) {
        for (std::size_t idx = 0; idx < k.count(d); ++idx) {
          if (has_face(k.simplex(d, idx), g)) set.member[k.global_index({d, idx})] = 1;
        }
      }
    }
    cover.sets_.push_back(std::move(set));
  }
  return cover;
}

OpenCover OpenCover::from_json(const OrientedComplex& k, const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("sets") || !j.at("sets").is_object()) {
    throw ParseError("cover must be an object with a \"sets\" object", 0, 0);
  }
  std::vector<std::string> names;
  std::vector<std::vector<Simplex>> generators;
  for (const auto& [name, entries] : j.at("sets").items()) {
    if (!entries.is_array()) throw ParseError("cover set " + name + " must be an array", 0, 0);
    std::vector<Simplex> gens;
    for (const auto& e : entries) {
      if (e.is_number_unsigned()) {
        const auto g = e.get<std::size_t>();
        if (g >= k.total_count()) throw ParseError("cover set " + name + ": simplex index out of range", 0, 0);
        gens.push_back(k.simplex(k.from_global_index(g)));
      } else if (e.is_array()) {
        gens.push_back(e.get<Simplex>());
      } else {
        throw ParseError("cover set " + name + ": entries are indices or vertex tuples", 0, 0);
      }
    }
    names.push_back(name);
    generators.push_back(std::move(gens));
  }
  return from_generators(k, std::move(names), generators);
}

OpenCover OpenCover::whole(const OrientedComplex& k) {
  std::vector<Simplex> vertices;
  for (int v = 0; v < k.vertex_count(); ++v) vertices.push_back({v});
  return from_generators(k, {"X"}, {vertices});
}

OpenCover OpenCover::vertex_stars(const OrientedComplex& k) {
  std::vector<std::string> names;
  std::vector<std::vector<Simplex>> gens;
  for (int v = 0; v < k.vertex_count(); ++v) {
    names.push_back("st" + std::to_string(v));
    gens.push_back({{v}});
  }
  return from_generators(k, std::move(names), gens);
}

bool OpenCover::contains(std::size_t set_index, SimplexRef s) const {
  return sets_.at(set_index).member.at(complex_->global_index(s)) != 0;
}

bool OpenCover::covers() const {
  for (int v = 0; v < complex_->vertex_count(); ++v) {
    bool hit = false;
    for (std::size_t i = 0; i < sets_.size() && !hit; ++i) hit = contains(i, {0, static_cast<std::size_t>(v)});
    if (!hit) return false;
  }
  return true;
}

void OpenCover::require_covers() const {
  if (!covers()) throw PreconditionError("cover does not contain every vertex");
}

bool OpenCover::is_small(const Simplex& s) const {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    bool inside = true;
    for (int v : s) {
      if (!contains(i, {0, static_cast<std::size_t>(v)})) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

}  // namespace ellone::simplicial
