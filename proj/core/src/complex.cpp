#include "ellone/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ellone/error.hpp"

namespace ellone {
namespace {

std::string describe(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

}  // namespace

Simplex face(const Simplex& s, std::size_t i) {
  Simplex out;
  out.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j != i) out.push_back(s[j]);
  }
  return out;
}

int sort_with_sign(std::vector<int>& tuple) {
  int sign = 1;
  // insertion sort; tuples are tiny
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i - 1] == tuple[i]) return 0;
  }
  return sign;
}

OrientedComplex OrientedComplex::from_simplices(int vertex_count, std::span<const Simplex> listed) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
  OrientedComplex k;
  k.vertex_count_ = vertex_count;

  std::vector<Simplex> sorted;
  sorted.reserve(listed.size());
  int top = vertex_count > 0 ? 0 : -1;
  for (const Simplex& raw : listed) {
    Simplex s = raw;
    if (s.empty()) throw PreconditionError("empty simplex in listing");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw PreconditionError("simplex " + describe(raw) + " repeats a vertex");
    }
    if (s.front() < 0 || s.back() >= vertex_count) {
      throw PreconditionError("simplex " + describe(raw) + " uses a vertex outside 0.." +
                              std::to_string(vertex_count - 1));
    }
    top = std::max(top, static_cast<int>(s.size()) - 1);
    sorted.push_back(std::move(s));
  }
  if (top < 0) return k;

  k.simplices_.assign(static_cast<std::size_t>(top) + 1, {});
  k.index_.assign(static_cast<std::size_t>(top) + 1, {});

  for (int v = 0; v < vertex_count; ++v) {
    k.index_[0].emplace(Simplex{v}, static_cast<std::size_t>(v));
    k.simplices_[0].push_back(Simplex{v});
  }

  // listed simplices of dimension >= 1 in listing order
  for (const Simplex& s : sorted) {
    const std::size_t d = s.size() - 1;
    if (d == 0) continue;
    if (k.index_[d].count(s)) throw PreconditionError("duplicate simplex " + describe(s));
    k.index_[d].emplace(s, k.simplices_[d].size());
    k.simplices_[d].push_back(s);
  }

  // face completion, top-down so that faces of completed faces are found too
  for (int d = top; d >= 2; --d) {
    std::set<Simplex> missing;
    for (const Simplex& s : k.simplices_[static_cast<std::size_t>(d)]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = face(s, i);
        if (!k.index_[static_cast<std::size_t>(d - 1)].count(f)) missing.insert(std::move(f));
      }
    }
    auto& level = k.simplices_[static_cast<std::size_t>(d - 1)];
    auto& index = k.index_[static_cast<std::size_t>(d - 1)];
    for (const Simplex& f : missing) {
      index.emplace(f, level.size());
      level.push_back(f);
    }
  }
  return k;
}

std::size_t OrientedComplex::count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return simplices_[static_cast<std::size_t>(dim)].size();
}

std::size_t OrientedComplex::total_count() const {
  std::size_t n = 0;
  for (const auto& level : simplices_) n += level.size();
  return n;
}

std::optional<std::size_t> OrientedComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > simplices_.size()) return std::nullopt;
  const auto& index = index_[s.size() - 1];
  auto it = index.find(s);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t OrientedComplex::require_index(const Simplex& s) const {
  auto idx = index_of(s);
  if (!idx) throw PreconditionError("simplex " + describe(s) + " is not in the complex");
  return *idx;
}

std::size_t OrientedComplex::global_index(SimplexRef ref) const {
  std::size_t offset = 0;
  for (int d = 0; d < ref.dim; ++d) offset += count(d);
  return offset + ref.index;
}

SimplexRef OrientedComplex::from_global_index(std::size_t global) const {
  for (int d = 0; d <= dimension(); ++d) {
    if (global < count(d)) return {d, global};
    global -= count(d);
  }
  throw PreconditionError("global simplex index out of range");
}

std::vector<std::size_t> OrientedComplex::face_indices(int dim, std::size_t index) const {
  const Simplex& s = simplex(dim, index);
  std::vector<std::size_t> out;
  if (dim == 0) return out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(*index_of(face(s, i)));
  return out;
}

std::vector<SimplexRef> OrientedComplex::maximal_simplices() const {
  std::vector<SimplexRef> out;
  for (int d = 0; d <= dimension(); ++d) {
    std::set<Simplex> covered;
    if (d < dimension()) {
      for (const Simplex& s : simplices_[static_cast<std::size_t>(d) + 1]) {
        for (std::size_t i = 0; i < s.size(); ++i) covered.insert(face(s, i));
      }
    }
    for (std::size_t i = 0; i < count(d); ++i) {
      if (!covered.count(simplex(d, i))) out.push_back({d, i});
    }
  }
  return out;
}

}  // namespace ellone
