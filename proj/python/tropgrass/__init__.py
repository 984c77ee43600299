"""Tropical Grassmannians, trees and tropical planes with exact arithmetic.

Plucker vectors are dicts mapping subset names such as "124" to
fractions.Fraction (or float("inf")).
"""

from fractions import Fraction

from . import _tropgrass as _core
from ._tropgrass import (
    FourPointViolation,
    ReconstructionError,
    g36_f_vector,
    g36_facet_census,
    g36_facet_classes,
    tn_betti,
    tn_stats,
)

__all__ = [
    "FourPointViolation",
    "ReconstructionError",
    "dual",
    "equal_mod_phi",
    "four_point_check",
    "g36_f_vector",
    "g36_facet_census",
    "g36_facet_classes",
    "g36_sample",
    "is_monomial_free",
    "plane_member",
    "plane_type",
    "reconstruct_plucker",
    "reconstruct_tree",
    "tn_betti",
    "tn_stats",
    "tree_vector",
    "tropical_minors",
]


def _out(x):
    return float("inf") if x == "inf" else Fraction(x)


def _in(x):
    if x == float("inf"):
        return "inf"
    return str(Fraction(x))


def _shape(w):
    n = max(int(c) for k in w for c in k)
    d = len(next(iter(w)))
    return d, n


def _wire(w):
    return {k: _in(v) for k, v in w.items()}


def _vec(coords):
    return {k: _out(v) for k, v in coords.items()}


def tropical_minors(matrix):
    return _vec(_core.tropical_minors([[_in(x) for x in row] for row in matrix]))


def four_point_check(w, n=None):
    """None if w is a (negated) tree metric, else a violating quadruple."""
    n = n or _shape(w)[1]
    return _core.four_point_check(n, _wire(w))


def reconstruct_tree(w, n=None):
    n = n or _shape(w)[1]
    t = _core.reconstruct_tree(n, _wire(w))
    t["lengths"] = [Fraction(x) for x in t["lengths"]]
    t["offsets"] = [Fraction(x) for x in t["offsets"]]
    return t


def tree_vector(n, splits):
    return _vec(_core.tree_vector(n, list(splits)))


def plane_member(w, point):
    d, n = _shape(w)
    return _core.plane_member(d, n, _wire(w), [_in(x) for x in point])


def plane_type(w):
    d, n = _shape(w)
    return _core.plane_type(d, n, _wire(w))


def dual(w):
    d, n = _shape(w)
    return _vec(_core.dual(d, n, _wire(w)))


def reconstruct_plucker(w, bound=None):
    """Recover w (modulo the lineality space) from its tropical plane."""
    d, n = _shape(w)
    if bound is None:
        bound = max(abs(v) for v in w.values() if v != float("inf"))
    return _vec(_core.reconstruct_plucker(d, n, _wire(w), _in(bound)))


def equal_mod_phi(a, b):
    d, n = _shape(a)
    return _core.equal_mod_phi(d, n, _wire(a), _wire(b))


def is_monomial_free(w, characteristic=0):
    d, n = _shape(w)
    return _core.is_monomial_free(d, n, _wire(w), characteristic)


def g36_sample(cls):
    return _vec(_core.g36_sample(cls))
