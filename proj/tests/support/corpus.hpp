#pragma once

#include <random>
#include <string>
#include <vector>

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"
#include "ellone/simplicial/cover.hpp"

namespace ellone::corpus {

struct Named {
  std::string name;
  OrientedComplex complex;
};

/// point, circles with 3..6 edges, two circles, 2-simplex, S^2, seven-vertex
/// torus, grid Klein bottle, grid Moebius strip, cone over a square.
std::vector<Named> complexes();

/// Maximal simplices as raw vertex lists, for the oracles.
std::vector<std::vector<int>> listed(const OrientedComplex& k);

/// Generator lists of three covers: vertex stars, the whole space, and two
/// overlapping halves of the vertex set.
std::vector<std::vector<std::vector<Simplex>>> cover_generators(const OrientedComplex& k);
std::vector<simplicial::OpenCover> covers(const OrientedComplex& k);

using Rng = std::mt19937_64;

/// Random p/q with |p| <= 9, 1 <= q <= 4.
Rational random_rational(Rng& rng);
/// Random chain or cochain on about half of the simplices of the degree.
Chain random_chain(const OrientedComplex& k, int degree, Rng& rng);
Cochain random_cochain(const OrientedComplex& k, int degree, Rng& rng);

}  // namespace ellone::corpus
