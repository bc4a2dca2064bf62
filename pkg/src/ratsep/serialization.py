"""Exact JSON encoding of instances, certificates, traces and results.

Numbers travel as canonical strings "p/q" (q > 0, lowest terms) or surd
objects {"r": "p/q", "s": "p/q", "k": int}; floats never enter the
format, so parse(serialize(x)) == x holds exactly.  Rational
coordinates are written as plain strings, irrational ones as surd
objects; the parser accepts either form anywhere a coordinate appears.
``dumps`` renders with sorted keys and fixed separators so equal data
serializes to identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .approximation import GridSpec, OuterApprox
from .certificates import Certificate
from .scalars import Surd, Vector
from .separation import SeparationTrace
from .sets import VPolyhedron

__all__ = [
    "Instance",
    "InstanceOptions",
    "fraction_to_str",
    "parse_fraction",
    "coord_to_json",
    "parse_coord",
    "vector_to_json",
    "parse_vector",
    "polyhedron_to_json",
    "parse_polyhedron",
    "certificate_to_json",
    "parse_certificate",
    "trace_to_json",
    "parse_trace",
    "grid_to_json",
    "parse_grid",
    "approx_to_json",
    "parse_approx",
    "instance_to_json",
    "parse_instance",
    "dumps",
]


def fraction_to_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(obj) -> Fraction:
    if isinstance(obj, bool):
        raise ValueError(f"not a rational: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        text = obj.strip()
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {obj!r}") from exc
    raise ValueError(f"not a rational: {obj!r}")


def coord_to_json(c: Surd):
    if c.is_rational:
        return fraction_to_str(c.as_fraction())
    return {"r": fraction_to_str(c.r), "s": fraction_to_str(c.s), "k": c.k}


def parse_coord(obj) -> Surd:
    if isinstance(obj, dict):
        extra = set(obj) - {"r", "s", "k"}
        if extra:
            raise ValueError(f"unknown surd fields: {sorted(extra)}")
        k = obj.get("k", 1)
        if not isinstance(k, int) or isinstance(k, bool):
            raise ValueError(f"surd k must be an integer, got {k!r}")
        return Surd(parse_fraction(obj.get("r", 0)), parse_fraction(obj.get("s", 0)), k)
    return Surd(parse_fraction(obj))


def vector_to_json(v: Vector) -> list:
    return [coord_to_json(c) for c in v]


def parse_vector(obj) -> Vector:
    if not isinstance(obj, list) or not obj:
        raise ValueError(f"a vector must be a nonempty array, got {obj!r}")
    return Vector([parse_coord(c) for c in obj])


def polyhedron_to_json(P: VPolyhedron) -> dict:
    return {
        "dim": P.dim,
        "k": P.field_k,
        "vertices": [vector_to_json(v) for v in P.vertices],
        "rays": [vector_to_json(r) for r in P.rays],
    }


def parse_polyhedron(obj) -> VPolyhedron:
    if not isinstance(obj, dict):
        raise ValueError("a set description must be an object")
    try:
        vertices = [parse_vector(v) for v in obj["vertices"]]
    except KeyError as exc:
        raise ValueError("set description is missing 'vertices'") from exc
    rays = [parse_vector(r) for r in obj.get("rays", [])]
    P = VPolyhedron(tuple(vertices), tuple(rays))
    if "dim" in obj and obj["dim"] != P.dim:
        raise ValueError(f"declared dim {obj['dim']} but coordinates have dim {P.dim}")
    if "k" in obj and P.field_k not in (1, obj["k"]):
        raise ValueError(f"declared field k={obj['k']} but data uses k={P.field_k}")
    return P


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "a": [fraction_to_str(f) for f in cert.a.as_fractions()],
        "beta": fraction_to_str(cert.beta),
    }


def parse_certificate(obj) -> Certificate:
    if not isinstance(obj, dict) or "a" not in obj or "beta" not in obj:
        raise ValueError("a certificate needs fields 'a' and 'beta'")
    a = Vector([parse_fraction(c) for c in obj["a"]])
    return Certificate(a, parse_fraction(obj["beta"]))


def trace_to_json(trace: SeparationTrace) -> dict:
    return {
        "z_tilde": vector_to_json(trace.z_tilde),
        "y_bar": vector_to_json(trace.y_bar),
        "d": vector_to_json(trace.d),
        "eps": fraction_to_str(trace.eps),
        "M": fraction_to_str(trace.M),
        "alpha": fraction_to_str(trace.alpha),
        "d_bar": vector_to_json(trace.d_bar),
        "eps_bar": fraction_to_str(trace.eps_bar),
        "delta_hat": fraction_to_str(trace.delta_hat),
        "lambda": fraction_to_str(trace.lam),
        "ball_center": vector_to_json(trace.ball_center),
        "ball_radius": fraction_to_str(trace.ball_radius),
        "a": vector_to_json(trace.a),
        "beta": fraction_to_str(trace.beta),
    }


def parse_trace(obj) -> SeparationTrace:
    if not isinstance(obj, dict):
        raise ValueError("a trace must be an object")
    try:
        return SeparationTrace(
            z_tilde=parse_vector(obj["z_tilde"]),
            y_bar=parse_vector(obj["y_bar"]),
            d=parse_vector(obj["d"]),
            eps=parse_fraction(obj["eps"]),
            M=parse_fraction(obj["M"]),
            alpha=parse_fraction(obj["alpha"]),
            d_bar=parse_vector(obj["d_bar"]),
            eps_bar=parse_fraction(obj["eps_bar"]),
            delta_hat=parse_fraction(obj["delta_hat"]),
            lam=parse_fraction(obj["lambda"]),
            ball_center=parse_vector(obj["ball_center"]),
            ball_radius=parse_fraction(obj["ball_radius"]),
            a=parse_vector(obj["a"]),
            beta=parse_fraction(obj["beta"]),
        )
    except KeyError as exc:
        raise ValueError(f"trace is missing field {exc.args[0]!r}") from exc


def grid_to_json(grid: GridSpec) -> dict:
    return {
        "min": [fraction_to_str(v) for v in grid.mins],
        "max": [fraction_to_str(v) for v in grid.maxs],
        "step": fraction_to_str(grid.step),
    }


def parse_grid(obj) -> GridSpec:
    if not isinstance(obj, dict):
        raise ValueError("a grid must be an object")
    try:
        mins = tuple(parse_fraction(v) for v in obj["min"])
        maxs = tuple(parse_fraction(v) for v in obj["max"])
        step = parse_fraction(obj["step"])
    except KeyError as exc:
        raise ValueError(f"grid is missing field {exc.args[0]!r}") from exc
    return GridSpec(mins, maxs, step)


def approx_to_json(approx: OuterApprox) -> dict:
    return {"cuts": [certificate_to_json(c) for c in approx.cuts]}


def parse_approx(obj, target: VPolyhedron) -> OuterApprox:
    if not isinstance(obj, dict) or "cuts" not in obj:
        raise ValueError("an outer approximation needs a 'cuts' field")
    return OuterApprox(target, tuple(parse_certificate(c) for c in obj["cuts"]))


@dataclass(frozen=True)
class InstanceOptions:
    budget: int | None = None
    max_den: int | None = None
    grid: GridSpec | None = None


@dataclass(frozen=True)
class Instance:
    """One parsed problem file: a set plus optional point, probes, options."""

    polyhedron: VPolyhedron
    point: Vector | None = None
    probes: tuple[Vector, ...] = ()
    certificate: Certificate | None = None
    options: InstanceOptions = field(default_factory=InstanceOptions)


def instance_to_json(inst: Instance) -> dict:
    out: dict = {"set": polyhedron_to_json(inst.polyhedron)}
    if inst.point is not None:
        out["point"] = vector_to_json(inst.point)
    if inst.probes:
        out["probes"] = [vector_to_json(p) for p in inst.probes]
    if inst.certificate is not None:
        out["certificate"] = certificate_to_json(inst.certificate)
    options: dict = {}
    if inst.options.budget is not None:
        options["budget"] = inst.options.budget
    if inst.options.max_den is not None:
        options["max_den"] = inst.options.max_den
    if inst.options.grid is not None:
        options["grid"] = grid_to_json(inst.options.grid)
    if options:
        out["options"] = options
    return out


def parse_instance(obj) -> Instance:
    if not isinstance(obj, dict) or "set" not in obj:
        raise ValueError("an instance needs a 'set' field")
    polyhedron = parse_polyhedron(obj["set"])
    point = parse_vector(obj["point"]) if "point" in obj else None
    probes = tuple(parse_vector(p) for p in obj.get("probes", []))
    certificate = (
        parse_certificate(obj["certificate"]) if "certificate" in obj else None
    )
    raw_opts = obj.get("options", {})
    if not isinstance(raw_opts, dict):
        raise ValueError("'options' must be an object")
    budget = raw_opts.get("budget")
    if budget is not None and (not isinstance(budget, int) or isinstance(budget, bool) or budget < 1):
        raise ValueError("options.budget must be a positive integer")
    max_den = raw_opts.get("max_den")
    if max_den is not None and (not isinstance(max_den, int) or isinstance(max_den, bool) or max_den < 1):
        raise ValueError("options.max_den must be a positive integer")
    grid = parse_grid(raw_opts["grid"]) if "grid" in raw_opts else None
    return Instance(
        polyhedron=polyhedron,
        point=point,
        probes=probes,
        certificate=certificate,
        options=InstanceOptions(budget=budget, max_den=max_den, grid=grid),
    )


def dumps(payload: dict) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
