#pragma once

#include "ellone/complex.hpp"

/// Small named triangulations used by the tests, benchmarks and CLI demos.
namespace ellone::standard {

OrientedComplex point();
/// The full n-simplex on vertices 0..n.
OrientedComplex simplex(int n);
/// Boundary of the (n+1)-simplex: an n-sphere with n+2 vertices.
OrientedComplex sphere(int n);
/// Cycle graph with k >= 3 edges [i, i+1] and [0, k-1].
OrientedComplex circle(int k);
/// Disjoint union of a k1-circle and a k2-circle.
OrientedComplex two_circles(int k1, int k2);
/// Seven-vertex torus (Moebius-Csaszar): triangles {i,i+1,i+3}, {i,i+2,i+3} mod 7.
OrientedComplex torus7();
/// rows x cols grid torus with diagonal (i,j)-(i+1,j+1); needs rows, cols >= 3.
OrientedComplex grid_torus(int rows, int cols);
/// Grid Klein bottle: columns glued straight, rows glued with a flip.
OrientedComplex klein_bottle(int rows, int cols);
/// Grid Moebius strip with `cols` squares along the core and one row.
OrientedComplex moebius_strip(int cols);
/// Triangulated rectangle with 2 * rows * cols triangles (a disk).
OrientedComplex grid_disk(int rows, int cols);
/// Cone over `base` with a new apex vertex (id = base.vertex_count()).
OrientedComplex cone(const OrientedComplex& base);

}  // namespace ellone::standard
