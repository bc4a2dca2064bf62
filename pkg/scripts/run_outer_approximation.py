#!/usr/bin/env python3
"""Outer-approximate a triangle with an irrational vertex by iterated cuts.

Probes a coarse grid around the set, collects one rational cut per
not-yet-excluded exterior probe, and reports how the exterior excess
(fraction of a fine grid inside all cuts but outside the set) shrinks
as cuts accumulate.  Writes the cut list JSON and an SVG to out/.
"""

import sys
import time
from fractions import Fraction as F
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from ratsep import GridSpec, Surd, Vector, VPolyhedron, membership, render_svg
from ratsep import serialization as ser
from ratsep.approximation import OuterApprox, excess_measure, outer_approximate


def main() -> int:
    sq2 = Surd.root(2)
    X = VPolyhedron((Vector([0, 0]), Vector([sq2, 0]), Vector([0, 1])))
    coarse = GridSpec((F(-1), F(-1)), (F(2), F(2)), F(1, 5))
    fine = GridSpec((F(-1), F(-1)), (F(2), F(2)), F(1, 20))

    probes = [p for p in coarse.points() if not membership(X, p)][:200]
    print(f"{len(probes)} exterior probes", file=sys.stderr)

    start = time.monotonic()
    approx = outer_approximate(X, probes, budget=200)
    print(f"{len(approx.cuts)} cuts in {time.monotonic() - start:.1f}s", file=sys.stderr)

    print(f"{'cuts':>4}  {'excess':>12}  {'~float':>8}", file=sys.stderr)
    for j in range(len(approx.cuts) + 1):
        ex = excess_measure(X, OuterApprox(X, approx.cuts[:j]), fine)
        print(f"{j:>4}  {str(ex):>12}  {float(ex):>8.4f}", file=sys.stderr)

    print(ser.dumps(ser.approx_to_json(approx)), end="")

    out_dir = Path(__file__).resolve().parent / "out"
    out_dir.mkdir(exist_ok=True)
    svg_path = out_dir / "outer_approximation.svg"
    svg_path.write_text(render_svg(X, approx.cuts, probes[0]), encoding="utf-8")
    print(f"wrote {svg_path}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
