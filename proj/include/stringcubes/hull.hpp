/**
 * Hull helpers shared by the polytope engine: supporting-hyperplane facet
 * enumeration from a point set and the deterministic hull triangulation that
 * backs volume(). Inputs are expected to affinely span their ambient space.
 */

#pragma once

#include <vector>

#include "stringcubes/rational.hpp"

namespace stringcubes::hull {

struct Facet {
    VectorXz normal;            // primitive, outward
    Rational offset;            // facet hyperplane is normal.x == offset
    std::vector<int> incident;  // indices of points on the hyperplane, sorted
};

/** All facets of conv(points) for a full-dimensional point set, found by
 *  testing each d-subset's hyperplane for being supporting. Deterministic
 *  order (sorted by normal, then offset). */
std::vector<Facet> facets_from_points(const std::vector<VectorXr>& points);

/** Triangulation of conv(points) into simplices, each a sorted list of d+1
 *  point indices: recursive cone construction from the lexicographically
 *  smallest point. Interior points are never used. */
std::vector<std::vector<int>> triangulate_points(const std::vector<VectorXr>& points);

}  // namespace stringcubes::hull
