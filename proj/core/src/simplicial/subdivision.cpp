#include "ellone/simplicial/subdivision.hpp"

#include <chrono>
#include <functional>
#include <string>

#include "ellone/error.hpp"

namespace ellone::simplicial {
namespace {

// Enumerates every flag ending at `top`, smallest face first.
void collect_flags(const OrientedComplex& k, SimplexRef top, std::vector<SimplexRef>& suffix,
                   std::vector<std::vector<SimplexRef>>& out) {
  suffix.push_back(top);
  out.emplace_back(suffix.rbegin(), suffix.rend());
  if (top.dim > 0) {
    for (std::size_t f : k.face_indices(top.dim, top.index)) {
      collect_flags(k, {top.dim - 1, f}, suffix, out);
    }
  }
  suffix.pop_back();
}

}  // namespace

SubdividedComplex SubdividedComplex::build(std::shared_ptr<const OrientedComplex> original) {
  SubdividedComplex out;
  out.original_ = std::move(original);
  const OrientedComplex& k = *out.original_;

  std::size_t offset = 0;
  for (int d = 0; d <= k.dimension(); ++d) {
    out.offsets_.push_back(offset);
    for (std::size_t i = 0; i < k.count(d); ++i) out.vertex_faces_.push_back({d, i});
    offset += k.count(d);
  }
  const int vertex_count = static_cast<int>(offset);

  // Top flags under every simplex give all simplices of sd K once faces are
  // completed; list them dimension by dimension in carrier order.
  std::vector<Simplex> listed;
  for (int d = 1; d <= k.dimension(); ++d) {
    for (std::size_t i = 0; i < k.count(d); ++i) {
      std::vector<std::vector<SimplexRef>> flags;
      std::vector<SimplexRef> suffix;
      collect_flags(k, {d, i}, suffix, flags);
      for (const auto& flag : flags) {
        if (flag.size() != static_cast<std::size_t>(d) + 1) continue;
        Simplex s;
        for (const SimplexRef& f : flag) s.push_back(out.barycenter(f));
        listed.push_back(std::move(s));
      }
    }
  }
  out.subdivided_ = std::make_shared<const OrientedComplex>(OrientedComplex::from_simplices(vertex_count, listed));

  // sd(s) = b_s . sd(ds). b_s has the largest id, so [b_s, w_0..w_{d-1}] sorts
  // to [w_0..w_{d-1}, b_s] with sign (-1)^d.
  const OrientedComplex& sk = *out.subdivided_;
  std::vector<std::vector<Chain>> images(static_cast<std::size_t>(k.dimension()) + 1);
  for (std::size_t v = 0; v < k.count(0); ++v) {
    Chain c(0);
    c.add(static_cast<std::size_t>(out.barycenter({0, v})), 1);
    images[0].push_back(std::move(c));
  }
  for (int d = 1; d <= k.dimension(); ++d) {
    for (std::size_t i = 0; i < k.count(d); ++i) {
      const int b = out.barycenter({d, i});
      const auto faces = k.face_indices(d, i);
      Chain image(d);
      const Rational cone_sign = (d % 2 == 0) ? 1 : -1;
      for (std::size_t f = 0; f < faces.size(); ++f) {
        const Rational face_sign = (f % 2 == 0) ? 1 : -1;
        for (const auto& [piece, coeff] : images[static_cast<std::size_t>(d) - 1][faces[f]]) {
          Simplex s = sk.simplex(d - 1, piece);
          s.push_back(b);
          image.add(sk.require_index(s), cone_sign * face_sign * coeff);
        }
      }
      images[static_cast<std::size_t>(d)].push_back(std::move(image));
    }
  }
  for (int d = 0; d <= k.dimension(); ++d) {
    SparseMatrix m(sk.count(d), k.count(d));
    for (std::size_t i = 0; i < k.count(d); ++i) {
      for (const auto& [row, value] : images[static_cast<std::size_t>(d)][i]) m.add(row, i, value);
    }
    out.sd_ops_.push_back(ChainOperator::from_matrix("sd_" + std::to_string(d), d, d, std::move(m)));
  }
  return out;
}

int SubdividedComplex::barycenter(SimplexRef face) const {
  return static_cast<int>(offsets_.at(static_cast<std::size_t>(face.dim)) + face.index);
}

Chain SubdividedComplex::sd(const Chain& c) const {
  validate(*original_, c);
  if (c.is_zero()) return Chain(c.degree());
  return sd_operator(c.degree())(c);
}

Chain SubdividedComplex::flatten(const Chain& c) const {
  validate(*subdivided_, c);
  Chain out(c.degree());
  for (const auto& [idx, value] : c) {
    std::vector<int> image;
    for (int v : subdivided_->simplex(c.degree(), idx)) {
      image.push_back(original_->simplex(face_of_vertex(v)).back());
    }
    const int sign = sort_with_sign(image);
    if (sign == 0) continue;
    out.add(original_->require_index(image), sign * value);
  }
  return out;
}

SimplexRef SubdividedComplex::carrier(SimplexRef subdivided_simplex) const {
  const Simplex& s = subdivided_->simplex(subdivided_simplex);
  return face_of_vertex(s.back());
}

nlohmann::ordered_json SubdividedComplex::report() const {
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < vertex_faces_.size(); ++v) {
    const SimplexRef f = vertex_faces_[v];
    vertices.push_back({{"id", v}, {"face_dim", f.dim}, {"face_index", f.index}, {"face", original_->simplex(f)}});
  }
  nlohmann::ordered_json counts = nlohmann::ordered_json::array();
  for (int d = 0; d <= subdivided_->dimension(); ++d) counts.push_back(subdivided_->count(d));
  return {{"vertex_rule", "id = offset(face_dim) + face_index"}, {"vertices", vertices}, {"counts", counts}};
}

std::vector<SubdivisionRound> iterate_subdivision(const OrientedComplex& k, int rounds, int cap) {
  if (rounds < 0) throw PreconditionError("rounds must be nonnegative");
  if (rounds > cap) {
    throw ResourceError("requested " + std::to_string(rounds) + " subdivision rounds; cap is " + std::to_string(cap));
  }
  std::vector<SubdivisionRound> out;
  auto current = std::make_shared<const OrientedComplex>(k);
  auto counts_of = [](const OrientedComplex& c) {
    std::vector<std::size_t> counts;
    for (int d = 0; d <= c.dimension(); ++d) counts.push_back(c.count(d));
    return counts;
  };
  out.push_back({0, counts_of(*current), 0.0});
  for (int r = 1; r <= rounds; ++r) {
    const auto start = std::chrono::steady_clock::now();
    SubdividedComplex next = SubdividedComplex::build(current);
    const auto stop = std::chrono::steady_clock::now();
    current = next.subdivided_ptr();
    out.push_back({r, counts_of(*current), std::chrono::duration<double>(stop - start).count()});
  }
  return out;
}

std::vector<std::size_t> predicted_top_counts(const OrientedComplex& k, int rounds) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(k.dimension()) + 1, 0);
  for (const SimplexRef& ref : k.maximal_simplices()) {
    std::size_t factorial = 1;
    for (int i = 2; i <= ref.dim + 1; ++i) factorial *= static_cast<std::size_t>(i);
    std::size_t pieces = 1;
    for (int r = 0; r < rounds; ++r) pieces *= factorial;
    counts[static_cast<std::size_t>(ref.dim)] += pieces;
  }
  return counts;
}

}  // namespace ellone::simplicial
