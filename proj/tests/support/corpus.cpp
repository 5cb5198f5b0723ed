#include "corpus.hpp"

#include "ellone/standard_complexes.hpp"

namespace ellone::corpus {

std::vector<Named> complexes() {
  namespace sc = ellone::standard;
  return {
      {"point", sc::point()},
      {"circle3", sc::circle(3)},
      {"circle4", sc::circle(4)},
      {"circle5", sc::circle(5)},
      {"circle6", sc::circle(6)},
      {"two_circles", sc::two_circles(3, 4)},
      {"triangle", sc::simplex(2)},
      {"sphere2", sc::sphere(2)},
      {"torus7", sc::torus7()},
      {"klein3x3", sc::klein_bottle(3, 3)},
      {"moebius3", sc::moebius_strip(3)},
      {"cone_square", sc::cone(sc::circle(4))},
  };
}

std::vector<std::vector<int>> listed(const OrientedComplex& k) {
  std::vector<std::vector<int>> out;
  for (const SimplexRef& ref : k.maximal_simplices()) out.push_back(k.simplex(ref));
  return out;
}

std::vector<std::vector<std::vector<Simplex>>> cover_generators(const OrientedComplex& k) {
  const int n = k.vertex_count();
  std::vector<std::vector<Simplex>> stars;
  for (int v = 0; v < n; ++v) stars.push_back({{v}});
  std::vector<Simplex> all, low, high;
  for (int v = 0; v < n; ++v) {
    all.push_back({v});
    if (2 * v <= n) low.push_back({v});
    if (2 * v >= n - 1) high.push_back({v});
  }
  return {stars, {all}, {low, high}};
}

std::vector<simplicial::OpenCover> covers(const OrientedComplex& k) {
  std::vector<simplicial::OpenCover> out;
  for (const auto& gens : cover_generators(k)) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i) names.push_back("U" + std::to_string(i));
    out.push_back(simplicial::OpenCover::from_generators(k, names, gens));
  }
  return out;
}

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return Rational(num(rng), den(rng));
}

namespace {

template <class G>
G random_graded(const OrientedComplex& k, int degree, Rng& rng) {
  G out(degree);
  if (degree < 0 || degree > k.dimension()) return out;
  std::bernoulli_distribution keep(0.5);
  for (std::size_t i = 0; i < k.count(degree); ++i) {
    if (keep(rng)) out.add(i, random_rational(rng));
  }
  return out;
}

}  // namespace

Chain random_chain(const OrientedComplex& k, int degree, Rng& rng) { return random_graded<Chain>(k, degree, rng); }

Cochain random_cochain(const OrientedComplex& k, int degree, Rng& rng) {
  return random_graded<Cochain>(k, degree, rng);
}

}  // namespace ellone::corpus
