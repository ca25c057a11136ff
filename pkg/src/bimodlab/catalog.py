"""Builders for the standard algebras the case analysis runs on."""

from .algebras import Algebra
from .quivers import QuiverPresentation


def _quiver_algebra(field, vertices, arrows, monomial_relations):
    rels = [[(field.one, r)] for r in monomial_relations]
    return Algebra.from_quiver(QuiverPresentation(field, vertices, arrows, rels))


def base_field_algebra(field):
    """k itself: one vertex, no arrows."""
    return _quiver_algebra(field, ["v"], [], [])


def product_of_fields(field, n=2):
    """k x ... x k with n factors."""
    return _quiver_algebra(field, ["v%d" % i for i in range(1, n + 1)], [], [])


def truncated_polynomial_algebra(field, n):
    """k[x]/(x^n) for n >= 2."""
    return _quiver_algebra(field, ["v"], [("x", "v", "v")], [("x",) * n])


def local_square_zero_algebra(field):
    """k[x,y]/(x^2, y^2, xy, yx): the three dimensional local algebra with
    two-dimensional square-zero radical."""
    return _quiver_algebra(field, ["v"], [("x", "v", "v"), ("y", "v", "v")],
                           [("x", "x"), ("y", "y"), ("x", "y"), ("y", "x")])


def two_loop_product_algebra(field):
    """k[x]/(x^2) x k[y]/(y^2): two vertices, one square-zero loop each."""
    return _quiver_algebra(field, ["u", "w"],
                           [("x", "u", "u"), ("y", "w", "w")],
                           [("x", "x"), ("y", "y")])


def connected_two_loop_extension(field):
    """The two-loop algebra with one extra arrow joining the vertices and
    square-zero radical; the minimal connected extension used as a
    representative in the second case analysis."""
    return _quiver_algebra(field, ["u", "w"],
                           [("x", "u", "u"), ("y", "w", "w"), ("a", "u", "w")],
                           [("x", "x"), ("y", "y"), ("x", "a"), ("a", "y")])


def linear_quiver_algebra(field, n=3):
    """Path algebra of the linear quiver 1 -> 2 -> ... -> n (no relations);
    its center is just the scalars."""
    vertices = ["v%d" % i for i in range(1, n + 1)]
    arrows = [("a%d" % i, "v%d" % i, "v%d" % (i + 1)) for i in range(1, n)]
    return _quiver_algebra(field, vertices, arrows, [])


def square_zero_with_extra_point(field):
    """k[x,y]/(x^2,y^2,xy,yx) x k: the representative with End(P_2) = k."""
    return _quiver_algebra(field, ["v", "w"],
                           [("x", "v", "v"), ("y", "v", "v")],
                           [("x", "x"), ("y", "y"), ("x", "y"), ("y", "x")])
