"""Exact scalars for geometry over a fixed real quadratic field.

Every number the library computes with is either a rational
(``fractions.Fraction``) or a ``Surd`` ``r + s*sqrt(k)`` with square-free
``k``, so every ordering question is settled by an exact sign
determination and nothing is ever rounded.  Square roots of field
elements usually fall outside the field; ``sqrt_enclosure`` brackets
them between rationals whenever a bound is all that is needed, and
``rational_in_ball`` / ``choose_rational_between`` produce exact
rational witnesses inside open regions, which is how irrational data
gets turned into rational certificates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import isqrt
from typing import Iterable, Iterator, Union

Rationalish = Union[int, Fraction]

__all__ = [
    "Surd",
    "QInterval",
    "Vector",
    "surd_sign",
    "sqrt_convergents",
    "sqrt_enclosure",
    "rational_in_ball",
    "choose_rational_between",
]


def _fraction(x: Rationalish) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def _is_square_free(k: int) -> bool:
    if k <= 0:
        return False
    d = 2
    while d * d <= k:
        if k % (d * d) == 0:
            return False
        d += 1
    return True


@total_ordering
class Surd:
    """An element ``r + s*sqrt(k)`` of the real quadratic field Q(sqrt(k)).

    ``k`` must be a positive square-free integer.  ``s == 0`` (or
    ``k == 1``) means the value is plain rational and the triple is
    canonicalized to ``(r, 0, 1)``, so two Surds are equal iff their
    canonical triples agree.  Instances are immutable by convention and
    hashable; arithmetic accepts ints and Fractions.  Combining two
    values with different irrational parts (different ``k > 1``) raises
    ``ValueError`` -- one quadratic extension per computation.
    """

    __slots__ = ("r", "s", "k")

    def __init__(self, r: Rationalish = 0, s: Rationalish = 0, k: int = 1):
        r = _fraction(r)
        s = _fraction(s)
        if not isinstance(k, int):
            raise TypeError("k must be an int")
        if s == 0:
            k = 1
        if k == 1:
            r, s = r + s, Fraction(0)
        elif not _is_square_free(k):
            raise ValueError(f"k must be positive and square-free, got {k}")
        self.r = r
        self.s = s
        self.k = k

    @classmethod
    def root(cls, k: int) -> "Surd":
        """sqrt(k) as a field element."""
        return cls(0, 1, k)

    # -- classification ------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.s == 0

    def as_fraction(self) -> Fraction:
        if self.s != 0:
            raise ValueError(f"{self!r} is irrational")
        return self.r

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}.

        Mixed-sign cases compare r**2 against s**2 * k, which decides
        |r| vs |s|*sqrt(k) without leaving the rationals.
        """
        rs = (self.r > 0) - (self.r < 0)
        ss = (self.s > 0) - (self.s < 0)
        if ss == 0:
            return rs
        if rs == 0:
            return ss
        if rs == ss:
            return rs
        d = self.r * self.r - self.s * self.s * self.k
        cmp = (d > 0) - (d < 0)
        if cmp == 0:
            return 0
        return rs if cmp > 0 else ss

    # -- coercion ------------------------------------------------------

    @classmethod
    def _coerce(cls, x) -> "Surd | None":
        if isinstance(x, Surd):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        return None

    def _k_with(self, other: "Surd") -> int:
        if self.k == other.k:
            return self.k
        if self.k == 1:
            return other.k
        if other.k == 1:
            return self.k
        raise ValueError(f"cannot mix sqrt({self.k}) and sqrt({other.k}) exactly")

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Surd(self.r + o.r, self.s + o.s, self._k_with(o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Surd(self.r - o.r, self.s - o.s, self._k_with(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Surd(-self.r, -self.s, self.k)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        k = self._k_with(o)
        return Surd(self.r * o.r + self.s * o.s * k, self.r * o.s + self.s * o.r, k)

    __rmul__ = __mul__

    def inverse(self) -> "Surd":
        if self.s == 0:
            if self.r == 0:
                raise ZeroDivisionError("inverse of zero")
            return Surd(1 / self.r)
        # (r - s*sqrt(k)) / (r^2 - s^2 k); the denominator is nonzero
        # because sqrt(k) is irrational for square-free k > 1.
        den = self.r * self.r - self.s * self.s * self.k
        return Surd(self.r / den, -self.s / den, self.k)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- comparisons ---------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.r == o.r and self.s == o.s and self.k == o.k

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self):
        if self.s == 0:
            return hash(self.r)
        return hash((self.r, self.s, self.k))

    def __bool__(self):
        return self.r != 0 or self.s != 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- misc ----------------------------------------------------------

    def __float__(self):
        return float(self.r) + float(self.s) * math.sqrt(self.k)

    def __repr__(self):
        if self.s == 0:
            return f"Surd({self.r})"
        return f"Surd({self.r}, {self.s}, {self.k})"

    def __str__(self):
        if self.s == 0:
            return str(self.r)
        return f"{self.r}{'+' if self.s >= 0 else ''}{self.s}*sqrt({self.k})"


def surd_sign(x: Surd | Rationalish) -> int:
    """Exact sign of a field element: -1, 0 or +1."""
    s = Surd._coerce(x)
    if s is None:
        raise TypeError(f"cannot take the sign of {type(x).__name__}")
    return s.sign()


@dataclass(frozen=True)
class QInterval:
    """A rational interval [lo, hi] enclosing some real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _fraction(self.lo))
        object.__setattr__(self, "hi", _fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value: Surd | Rationalish) -> bool:
        v = Surd._coerce(value)
        return (v - self.lo).sign() >= 0 and (Surd(self.hi) - v).sign() >= 0


class Vector:
    """A point or direction with Surd coordinates sharing one field.

    Rational coordinates embed in any Q(sqrt(k)); two coordinates with
    different irrational parts are rejected.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[Surd | Rationalish]):
        out = []
        for c in coords:
            out.append(c if isinstance(c, Surd) else Surd(c))
        if not out:
            raise ValueError("a vector needs at least one coordinate")
        k = 1
        for c in out:
            if c.k != 1:
                if k == 1:
                    k = c.k
                elif c.k != k:
                    raise ValueError("coordinates mix different quadratic fields")
        self.coords = tuple(out)

    @classmethod
    def zero(cls, dim: int) -> "Vector":
        return cls([Fraction(0)] * dim)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def field_k(self) -> int:
        for c in self.coords:
            if c.k != 1:
                return c.k
        return 1

    @property
    def is_rational(self) -> bool:
        return all(c.s == 0 for c in self.coords)

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(c.as_fraction() for c in self.coords)

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    # -- container protocol --------------------------------------------

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Vector({', '.join(str(c) for c in self.coords)})"

    # -- linear structure ----------------------------------------------

    def _check_dim(self, other: "Vector"):
        if len(self.coords) != len(other.coords):
            raise ValueError(
                f"dimension mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        self._check_dim(other)
        return Vector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        self._check_dim(other)
        return Vector([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Vector([-c for c in self.coords])

    def __mul__(self, scalar):
        s = Surd._coerce(scalar)
        if s is None:
            return NotImplemented
        return Vector([c * s for c in self.coords])

    __rmul__ = __mul__

    def dot(self, other: "Vector") -> Surd:
        self._check_dim(other)
        total = Surd(0)
        for a, b in zip(self.coords, other.coords):
            total = total + a * b
        return total

    def norm_sq(self) -> Surd:
        return self.dot(self)


# -- rational enclosures and witnesses ----------------------------------


def sqrt_convergents(k: int) -> Iterator[Fraction]:
    """Continued-fraction convergents of sqrt(k) for square-free k > 1.

    Successive convergents p/q satisfy |p/q - sqrt(k)| < 1/q**2 and
    alternate sides, so they reach any positive tolerance.
    """
    if k <= 1 or not _is_square_free(k):
        raise ValueError(f"need square-free k > 1, got {k}")
    a0 = isqrt(k)
    m, d, a = 0, 1, a0
    h_prev, h = 1, a0
    q_prev, q = 0, 1
    while True:
        yield Fraction(h, q)
        m = d * a - m
        d = (k - m * m) // d
        a = (a0 + m) // d
        h_prev, h = h, a * h + h_prev
        q_prev, q = q, a * q + q_prev


def sqrt_enclosure(x: Surd | Rationalish, tol: Rationalish) -> QInterval:
    """A rational interval [lo, hi] with lo**2 <= x <= hi**2, hi - lo <= tol.

    Perfect squares of rationals are returned exactly; otherwise the
    enclosure comes from bisection started at the integer bracket
    [floor(sqrt(x)), floor(sqrt(x)) + 1].  Deterministic in (x, tol).
    """
    x = Surd._coerce(x)
    tol = _fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    sgn = x.sign()
    if sgn < 0:
        raise ValueError(f"cannot enclose the square root of the negative {x}")
    if sgn == 0:
        return QInterval(Fraction(0), Fraction(0))
    if x.is_rational:
        f = x.as_fraction()
        rn, rd = isqrt(f.numerator), isqrt(f.denominator)
        if rn * rn == f.numerator and rd * rd == f.denominator:
            root = Fraction(rn, rd)
            return QInterval(root, root)
    top = 1
    while (Surd(top * top) - x).sign() < 0:
        top *= 2
    lo_i, hi_i = 0, top
    while hi_i - lo_i > 1:
        mid = (lo_i + hi_i) // 2
        if (x - mid * mid).sign() >= 0:
            lo_i = mid
        else:
            hi_i = mid
    lo, hi = Fraction(lo_i), Fraction(lo_i + 1)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        d = (x - mid * mid).sign()
        if d == 0:
            return QInterval(mid, mid)
        if d > 0:
            lo = mid
        else:
            hi = mid
    return QInterval(lo, hi)


def rational_in_ball(center: Vector, radius: Rationalish) -> Vector:
    """A rational point q with ||q - center|| <= radius, verified exactly.

    Each irrational coordinate r + s*sqrt(k) is replaced by r + s*w for
    the first continued-fraction convergent w of sqrt(k) that lands
    within the per-coordinate budget min(radius/(2n), radius**2); the
    closing check ||q - center||**2 <= radius**2 is an exact Surd
    comparison.  Deterministic in (center, radius).
    """
    radius = _fraction(radius)
    if radius <= 0:
        raise ValueError("radius must be positive")
    if center.is_rational:
        return center
    n = center.dim
    budget = min(radius / (2 * n), radius * radius)
    budget_sq = Surd(budget * budget)
    out: list[Fraction] = []
    for c in center.coords:
        if c.is_rational:
            out.append(c.as_fraction())
            continue
        for w in sqrt_convergents(c.k):
            cand = c.r + c.s * w
            diff = Surd(cand) - c
            if (diff * diff - budget_sq).sign() <= 0:
                out.append(cand)
                break
    q = Vector(out)
    gap = q - center
    if (gap.norm_sq() - Surd(radius * radius)).sign() > 0:
        raise RuntimeError("per-coordinate budgets failed to cover the ball")
    return q


def choose_rational_between(lo: Surd | Rationalish, hi: Surd | Rationalish) -> Fraction:
    """A rational strictly between lo and hi, both checked exactly.

    The midpoint is returned when it is rational; otherwise the
    midpoint's sqrt(k) part is walked through continued-fraction
    convergents until the resulting rational falls strictly inside.
    Deterministic in (lo, hi).
    """
    lo = Surd._coerce(lo)
    hi = Surd._coerce(hi)
    if (hi - lo).sign() <= 0:
        raise ValueError(f"need lo < hi, got lo={lo}, hi={hi}")
    mid = (lo + hi) * Fraction(1, 2)
    if mid.is_rational:
        return mid.as_fraction()
    for w in sqrt_convergents(mid.k):
        cand = mid.r + mid.s * w
        c = Surd(cand)
        if (c - lo).sign() > 0 and (hi - c).sign() > 0:
            return cand
    raise AssertionError("unreachable: convergents converge to the midpoint")
