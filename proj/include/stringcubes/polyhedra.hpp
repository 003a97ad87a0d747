/**
 * Exact rational H-polytope engine. Vertices come from brute-force
 * enumeration of facet subsets, lattice points from a capped bounding-box
 * scan, volume from a deterministic triangulation of the hull. Everything is
 * exact; there are no tolerances anywhere.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stringcubes/rational.hpp"

namespace stringcubes {

/** The closed halfspace {x : normal.x <= bound}. Zero normals are rejected. */
struct Halfspace {
    VectorXz normal;
    Rational bound;

    Halfspace(VectorXz n, Rational b) : normal(std::move(n)), bound(std::move(b))
    {
        if (normal.size() == 0 || (normal.array() == 0).all())
            throw std::invalid_argument("halfspace normal must be nonzero");
    }

    Rational eval(const VectorXr& x) const
    {
        Rational s = 0;
        for (Eigen::Index i = 0; i < normal.size(); ++i)
            s += Rational(normal(i)) * x(i);
        return s;
    }
};

class HPolytope {
  public:
    HPolytope(int dim, std::vector<Halfspace> halfspaces)
        : dim_(dim), halfspaces_(std::move(halfspaces))
    {
        if (dim < 0)
            throw std::invalid_argument("negative dimension");
        for (const auto& h : halfspaces_)
            if (h.normal.size() != dim)
                throw std::invalid_argument("halfspace dimension mismatch");
    }

    int dim() const { return dim_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  private:
    int dim_;
    std::vector<Halfspace> halfspaces_;
};

/** Finite point set, lexicographically sorted and duplicate free. */
struct VertexSet {
    int dim = 0;
    std::vector<VectorXr> points;

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
};

/** Thrown by operations that require a bounded polytope; carries a recession
 *  direction as the witness. */
class UnboundedError : public std::domain_error
{
  public:
    UnboundedError(std::string what, VectorXr ray_)
        : std::domain_error(std::move(what)), ray(std::move(ray_)) {}

    VectorXr ray;
};

inline constexpr std::uint64_t kDefaultLatticeCap = 100'000'000ull;

/**
 * Exact vertex set: every n-subset of bounding hyperplanes is solved and the
 * feasible solutions kept. Empty result means the polytope is empty. Throws
 * UnboundedError when the recession cone is nontrivial.
 */
VertexSet vertices(const HPolytope& P);

/** True iff every point has integer coordinates. */
bool is_lattice_polytope(const VertexSet& V);

/**
 * True iff every vertex lies on exactly dim-many irredundant facet
 * hyperplanes. A lower-dimensional polytope is judged inside its affine
 * hull. Throws std::domain_error on the empty polytope.
 */
bool is_simple(const HPolytope& P);

/**
 * True iff the polytope is simple and the primitive edge directions at every
 * vertex form a matrix of determinant +-1. Requires a lattice polytope
 * (std::domain_error otherwise); lower-dimensional input is judged inside its
 * affine hull after a lattice-preserving change of coordinates.
 */
bool is_smooth(const HPolytope& P);

/** All integer points, by scanning the integer bounding box. Throws
 *  ResourceLimitError when the box has more than `cap` candidates. */
std::vector<std::vector<long long>> lattice_points(const HPolytope& P,
                                                   std::uint64_t cap = kDefaultLatticeCap);

/**
 * Exact Euclidean volume of the convex hull, via a deterministic cone
 * triangulation from the lexicographically smallest vertex. Returns 0 when
 * the points do not affinely span the ambient space.
 */
Rational volume(const VertexSet& V);

bool contains(const HPolytope& P, const VectorXr& x);
bool contains_polytope(const HPolytope& P, const VertexSet& V);

/** Duplicate and redundant halfspaces removed (exact LP test). For a
 *  full-dimensional polytope the result is the facet description. */
HPolytope irredundant(const HPolytope& P);

/** Facet description of conv(V). Requires V to span the ambient space. */
HPolytope hull_halfspaces(const VertexSet& V);

/** Dimension of the affine hull of V; -1 when V is empty. */
int affine_dimension(const VertexSet& V);

/** OFF mesh export, ambient dimension 3 only. Coordinates are printed as
 *  decimal doubles; this is a viewing format, not a certification path. */
std::string to_off(const VertexSet& V);

}  // namespace stringcubes
