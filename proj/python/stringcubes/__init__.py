"""Exact polytopes attached to words in root systems.

Twisted cubes and their Cartier data, generalized string polytopes,
condition (P) certificates, and smooth resolution multiplicity lists,
all in exact rational arithmetic. The heavy lifting happens in the
compiled extension; this package adds small conveniences for fractions.
"""

from fractions import Fraction

from stringcubes._core import *  # noqa: F401,F403
from stringcubes._core import (
    __version__,
    in_delta as _in_delta,
    twisted_cube_vertices as _twisted_cube_vertices,
)


def as_fraction(value):
    """Parse an exact 'p/q' string (or int) into a fractions.Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(str(value))


def in_delta(family, rank, word, mult, point):
    """Membership in the generalized string polytope.

    Point entries may be ints, Fractions, or 'p/q' strings.
    """
    coords = [str(Fraction(str(c))) for c in point]
    return _in_delta(family, rank, word, mult, coords)


def twisted_cube_vertex_fractions(family, rank, word, mult):
    """Vertices of the twisted cube as tuples of Fractions."""
    return [
        tuple(Fraction(c) for c in vertex)
        for vertex in _twisted_cube_vertices(family, rank, word, mult)
    ]
