"""Square-lattice Laplacian code: rank deficiency without confinement.

Large checkerboard rectangles cost only their four corners.

Run: python demos/square_lattice.py
"""

from __future__ import annotations

from fractonprod import gf2
from fractonprod.cli import checkerboard_rectangle, square_demo


def main(L=20):
    result = square_demo(L, trials=1000, seed=7)
    code, curve = result["code"], result["curve"]
    print(f"{L}x{L} torus: n={code.n} k={code.k} d={code.d}")
    print("|e|  min |s| found by cutting the sublattice codeword")
    for r in curve.rows[::8]:
        print(f"{r.weight:3d}  {r.min_syndrome}")
    e = checkerboard_rectangle(L, 4, 7)
    print(f"explicit 4x7 rectangle: |e|={int(e.sum())} |s|={int(gf2.matvec(code.H, e).sum())}")


if __name__ == "__main__":
    main()
