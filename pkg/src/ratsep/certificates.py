"""Rational halfspace certificates and independent cross-checks.

A ``Certificate`` (a, beta) asserts that the halfspace <a, x> <= beta
contains a set while excluding a query point; ``verify_certificate``
decides that claim with finitely many exact comparisons.  The
brute-force enumerator is a deliberately dumb 2-D oracle for catching
pipeline bugs, and ``rational_parallel_direction`` decides whether a
halfspace with irrational normal sits inside any rational one at all --
it does not when the normal has no positively-parallel rational vector,
which is why pointedness (and not mere closedness) is the right
hypothesis for rational outer descriptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatchError
from .scalars import Surd, Vector, choose_rational_between
from .sets import VPolyhedron, support_value

__all__ = [
    "Certificate",
    "verify_certificate",
    "brute_force_separator",
    "rational_parallel_direction",
]


@dataclass(frozen=True)
class Certificate:
    """A rational halfspace {x : <a, x> <= beta} with a != 0.

    Coordinates are Fractions in lowest terms (canonical), carried as a
    rational Vector so they dot exactly against field-valued points.
    """

    a: Vector
    beta: Fraction

    def __post_init__(self):
        if not isinstance(self.a, Vector):
            object.__setattr__(self, "a", Vector(self.a))
        if not self.a.is_rational:
            raise ValueError("certificate normal must be rational")
        if self.a.is_zero():
            raise ValueError("certificate normal must be nonzero")
        if not isinstance(self.beta, Fraction):
            object.__setattr__(self, "beta", Fraction(self.beta))


def verify_certificate(X: VPolyhedron, y_tilde: Vector, cert: Certificate) -> bool:
    """Exact check: all vertices obey the cut, all rays point along it,
    and the query point violates it strictly."""
    if X.dim != y_tilde.dim or X.dim != cert.a.dim:
        raise DimensionMismatchError("certificate, set and point must share a dimension")
    a, beta = cert.a, Surd(cert.beta)
    for v in X.vertices:
        if (a.dot(v) - beta).sign() > 0:
            return False
    for r in X.rays:
        if a.dot(r).sign() > 0:
            return False
    return (a.dot(y_tilde) - beta).sign() > 0


def _height_fractions(h: int) -> list[Fraction]:
    """Canonical fractions p/q with max(|p|, q) == h, descending."""
    vals = set()
    for p in range(-h, h + 1):
        if gcd(abs(p), h) == 1:
            vals.add(Fraction(p, h))
    for q in range(1, h):
        if gcd(h, q) == 1:
            vals.add(Fraction(h, q))
            vals.add(Fraction(-h, q))
    return sorted(vals, reverse=True)


def _direction_pairs(max_den: int):
    """All pairs of bounded canonical fractions, by height then descending.

    Height of p/q is max(|p|, q); a pair's height is the max of its
    coordinates' heights.  Pairs stream in ascending height classes; in
    each class, pairs whose first coordinate realizes the height come
    first.  Every bounded pair appears exactly once, so exhausting the
    stream is an exhaustive scan.
    """
    below: list[Fraction] = []
    for h in range(1, max_den + 1):
        exact = _height_fractions(h)
        upto = sorted(below + exact, reverse=True)
        for x in exact:
            for y in upto:
                yield x, y
        for x in below:
            for y in exact:
                yield x, y
        below = upto


def _direction_key(a1: Fraction, a2: Fraction) -> tuple[int, int]:
    u = a1.numerator * a2.denominator
    v = a2.numerator * a1.denominator
    g = gcd(abs(u), abs(v))
    return (u // g, v // g)


def brute_force_separator(
    X: VPolyhedron, y_tilde: Vector, max_den: int
) -> Certificate | None:
    """Enumerate bounded rational normals until one separates (2-D only).

    Scans every a in Q^2 with |numerators| and denominators at most
    max_den (order documented in ``_direction_pairs``), returning the
    first a with finite support value sigma_X(a) < <a, y_tilde>, paired
    with a strictly-between rational bound.  Positive rescalings of an
    already-tested direction are skipped, since separation is invariant
    under them.  Returns None when no bounded normal separates.
    """
    if X.dim != 2 or y_tilde.dim != 2:
        raise DimensionMismatchError("the brute-force oracle is 2-D only")
    if max_den < 1:
        raise ValueError("max_den must be a positive integer")
    seen: set[tuple[int, int]] = set()
    for a1, a2 in _direction_pairs(max_den):
        if a1 == 0 and a2 == 0:
            continue
        key = _direction_key(a1, a2)
        if key in seen:
            continue
        seen.add(key)
        a = Vector([a1, a2])
        sv = support_value(X, a)
        if not sv.is_finite:
            continue
        rhs = a.dot(y_tilde)
        if (rhs - sv.value).sign() > 0:
            return Certificate(a, choose_rational_between(sv.value, rhs))
    return None


def rational_parallel_direction(a: Vector) -> Vector | None:
    """A rational c = mu * a with mu > 0, or None when none exists.

    Normalizing by the first nonzero coordinate makes every entry a
    ratio a_j / a_i0, which is rational exactly when the coordinates
    are pairwise rationally dependent -- decidable in the field.  The
    halfspace {<a, x> <= beta} is contained in some rational closed
    halfspace iff such a c exists, because halfspace containment forces
    positively parallel normals.
    """
    if a.is_zero():
        raise ValueError("direction must be nonzero")
    i0 = next(i for i, c in enumerate(a) if c.sign() != 0)
    pivot = a[i0]
    ratios = [c / pivot for c in a]
    if not all(r.is_rational for r in ratios):
        return None
    c = Vector([r.as_fraction() for r in ratios])
    return -c if pivot.sign() < 0 else c
