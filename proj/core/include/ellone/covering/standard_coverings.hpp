#pragma once

#include <vector>

#include "ellone/covering/covering.hpp"
#include "ellone/covering/transfer.hpp"

/// Coverings and isometry data used by the tests and CLI demos.
namespace ellone::covering::standard {

/// Circle with n (even) vertices in cyclic positions 0..n-1, labelled so that
/// even positions come first: position p has label p/2 (p even) or n/2 + p/2
/// (p odd). Every edge joins an even and an odd position, so rotations by an
/// even number of steps keep the vertex order of every edge.
OrientedComplex parity_circle(int n);
/// Label of cyclic position p on parity_circle(n).
int parity_label(int n, int p);

/// X~ = X, trivial deck group, every vertex in the domain.
CoveringDatum trivial_covering(const OrientedComplex& k);

/// parity_circle(m * k) over parity_circle(k) (k even) with deck group Z/m
/// rotating by k positions.
CoveringDatum cyclic_circle_cover(int k, int m);

/// 3 x 6 grid torus over the 3 x 3 grid torus, deck group Z/2 shifting three
/// columns. Vertices (i, j) are labelled by colour (i + j) mod 3, then i, then
/// j, so each triangle has one vertex per colour in increasing order.
CoveringDatum torus_cover();
/// Grid torus with the colour labelling above (rows, cols multiples of 3).
OrientedComplex coloured_torus(int rows, int cols);
int coloured_label(int rows, int cols, int i, int j);

/// Rotation of parity_circle(n) by `step` positions generating G; Gamma is
/// generated by the rotation by `sub_step` positions (0 for the trivial group).
IsometryGroupDatum circle_rotations(int n, int step, int sub_step);
/// coloured_torus(3, 6) with G generated by the three-column shift and Gamma trivial.
IsometryGroupDatum torus_shift();

}  // namespace ellone::covering::standard
