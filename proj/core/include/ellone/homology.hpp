#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ellone/chain.hpp"
#include "ellone/complex.hpp"

namespace ellone {

/// dim ker d_n - dim im d_{n+1} over Q (unreduced homology).
std::size_t homology_rank(const OrientedComplex& k, int n);

/// Ranks for n = 0..dimension().
std::vector<std::size_t> homology_ranks(const OrientedComplex& k);

/// Cocycles whose classes form a basis of H^n (empty above the top dimension).
std::vector<Cochain> cohomology_basis(const OrientedComplex& k, int n);

/// Cycles whose classes form a basis of H_n (empty above the top dimension).
std::vector<Chain> homology_basis(const OrientedComplex& k, int n);

/// Some eta with coboundary(eta) == f, or nullopt when f is not a coboundary.
/// For f of degree 0 the only coboundary is 0 (non-augmented).
std::optional<Cochain> coboundary_primitive(const OrientedComplex& k, const Cochain& f);

/// Some gamma with boundary(gamma) == c, or nullopt.
std::optional<Chain> boundary_primitive(const OrientedComplex& k, const Chain& c);

bool is_cycle(const OrientedComplex& k, const Chain& c);
bool is_cocycle(const OrientedComplex& k, const Cochain& f);

}  // namespace ellone
