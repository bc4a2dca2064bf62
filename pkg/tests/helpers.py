"""Seeded random generators for sets, rays and provably exterior points.

Everything draws from an explicit ``random.Random`` so callers control
determinism; exactness of the constructions is asserted on the spot.
"""

from fractions import Fraction
from random import Random

from ratsep import (
    Surd,
    Vector,
    VPolyhedron,
    membership,
    norm_upper,
    point_in_ball,
    rational_in_ball,
    support_value,
)


def rand_fraction(rng: Random, span: int = 3, dens=(1, 2, 3, 4)) -> Fraction:
    den = rng.choice(dens)
    return Fraction(rng.randint(-span * den, span * den), den)


def rand_coord(rng: Random, k: int) -> Surd:
    if k == 1 or rng.random() < 0.5:
        return Surd(rand_fraction(rng))
    return Surd(rand_fraction(rng), Fraction(rng.choice([-1, 1]), rng.choice([1, 2])), k)


def rand_vector(rng: Random, dim: int, k: int = 1) -> Vector:
    return Vector([rand_coord(rng, k) for _ in range(dim)])


def rand_rational_vector(rng: Random, dim: int, span: int = 3) -> Vector:
    return Vector([rand_fraction(rng, span) for _ in range(dim)])


def random_pointed_rays(rng: Random, dim: int, count: int, k: int = 1) -> tuple[Vector, ...]:
    """Rays drawn strictly inside one open halfspace: a pointed cone."""
    while True:
        g = rand_rational_vector(rng, dim)
        if not g.is_zero():
            break
    rays: list[Vector] = []
    while len(rays) < count:
        r = rand_vector(rng, dim, k)
        if not r.is_zero() and g.dot(r).sign() < 0:
            rays.append(r)
    return tuple(rays)


def random_nonpointed_rays(rng: Random, dim: int, extra: int = 1) -> tuple[Vector, ...]:
    """A ray set containing r and -r, hence a line."""
    while True:
        r = rand_rational_vector(rng, dim)
        if not r.is_zero():
            break
    rays = [r, -r]
    while len(rays) < 2 + extra:
        w = rand_rational_vector(rng, dim)
        if not w.is_zero():
            rays.append(w)
    return tuple(rays)


def random_pointed_polyhedron(
    rng: Random, dim: int, k: int, n_vertices: int, n_rays: int
) -> VPolyhedron:
    vertices = tuple(rand_vector(rng, dim, k) for _ in range(n_vertices))
    rays = random_pointed_rays(rng, dim, n_rays, k) if n_rays else ()
    return VPolyhedron(vertices, rays)


def exterior_point(
    rng: Random, P: VPolyhedron, scale: Fraction = Fraction(1), irrational: bool = False
) -> Vector:
    """A point provably outside P.

    Push past the support-maximizing vertex along a direction u with
    finite support value: <u, y> = sigma_P(u) + t * ||u||^2 > sigma_P(u)
    for any t > 0, so y cannot belong to P.  The exact membership test
    double-checks.
    """
    while True:
        u = rand_rational_vector(rng, P.dim)
        if u.is_zero():
            continue
        if any(u.dot(r).sign() > 0 for r in P.rays):
            continue
        sv = support_value(P, u)
        assert sv.is_finite
        best = P.vertices[0]
        for v in P.vertices[1:]:
            if (u.dot(v) - u.dot(best)).sign() > 0:
                best = v
        factor = Surd(scale, scale / 2, 2) if irrational else Surd(scale)
        y = best + factor * u
        assert not membership(P, y)
        return y


def random_point_inside(rng: Random, P: VPolyhedron, ray_span: int = 2) -> Vector:
    """A random convex combination of vertices plus a nonnegative ray mix."""
    weights = [Fraction(rng.randint(0, 4)) for _ in P.vertices]
    if sum(weights) == 0:
        weights[rng.randrange(len(weights))] = Fraction(1)
    total = sum(weights)
    x = Vector.zero(P.dim)
    for w, v in zip(weights, P.vertices):
        x = x + (w / total) * v
    for r in P.rays:
        t = Fraction(rng.randint(0, ray_span), rng.choice([1, 2]))
        if t:
            x = x + t * r
    return x


def unit_directions_2d() -> list[Vector]:
    """16 exactly-unit rational directions from the Pythagorean circle map."""
    ts = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4),
          Fraction(1), Fraction(3, 2), Fraction(2), Fraction(4)]
    dirs: list[Vector] = []
    for t in ts:
        den = 1 + t * t
        u = Vector([(1 - t * t) / den, 2 * t / den])
        assert u.norm_sq() == 1
        dirs.append(u)
        dirs.append(-u)
    return dirs


def unit_directions(dim: int) -> list[Vector]:
    """16 exactly-unit rational directions spread over coordinate planes."""
    base = unit_directions_2d()
    if dim == 2:
        return base
    planes = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    dirs = []
    for idx, u in enumerate(base):
        i, j = planes[idx % len(planes)]
        coords = [Fraction(0)] * dim
        coords[i], coords[j] = u[0].as_fraction(), u[1].as_fraction()
        dirs.append(Vector(coords))
    return dirs


def rational_points_in_ball(
    rng: Random, center: Vector, radius: Fraction, count: int
) -> list[Vector]:
    """Random rational points, each verified exactly inside the closed ball."""
    out: list[Vector] = []
    while len(out) < count:
        w = rand_rational_vector(rng, center.dim, span=2)
        if w.is_zero():
            continue
        offset = (radius / 2 / norm_upper(w)) * w
        p = rational_in_ball(center + offset, radius / 4)
        assert point_in_ball(p, center, radius)
        out.append(p)
    return out
