"""Pinwheel codes: tiling growth, dimension, distance and the depletion offset.

Run: python demos/pinwheel_codes.py [output.svg]
"""

from __future__ import annotations

import sys

from fractonprod import gf2
from fractonprod import pinwheel as pw
from fractonprod.seeds import boundary_logical_guard, pinwheel_code


def main(svg_path=None):
    for N in range(0, 6):
        tg = pw.generate(N)
        print(f"N={N}: {tg.graph.n} vertices, {len(tg.graph.edges)} edges, {len(pw.boundary_vertices(tg))} on the boundary")
    print()
    print("p = 7, offset 0")
    for N in (3, 4, 5):
        c = pinwheel_code(N, 7)
        res = gf2.min_weight_nonzero(c.H, budget=5_000_000)
        print(f"  N={N}: [{c.n},{c.k},{res.weight}] {'exact' if res.exact else 'upper bound'}")
    print()
    print("N = 4 across depletion offsets")
    for offset in range(7):
        c = pinwheel_code(4, 7, offset)
        guard = boundary_logical_guard(c)
        print(f"  offset {offset}: k={c.k} d={c.d}  guard flags short boundary logical: {guard['short_boundary_logical']}")
    if svg_path:
        c = pinwheel_code(3, 7)
        with open(svg_path, "w") as fh:
            fh.write(pw.to_svg(c.tiling, highlight=gf2.support(c.distance_result.vector)))
        print(f"wrote {svg_path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else None)
