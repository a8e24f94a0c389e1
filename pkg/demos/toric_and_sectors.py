"""Toric codes from repetition codes, and superselection sectors of products.

Run: python demos/toric_and_sectors.py
"""

from __future__ import annotations

from fractonprod import diagnostics as dg
from fractonprod.products import hgp, predicted_hgp_params
from fractonprod.seeds import pinwheel_code, random_typical_ldpc, repetition_code


def show(label, c1, c2):
    q = hgp(c1, c2)
    p = predicted_hgp_params(c1, c2, with_distance=False)
    s = dg.superselection_count(q)
    print(f"{label:28s} [[{q.n},{q.k}]]  predicted k={p.k}  kxT={s.kxT} kzT={s.kzT}  sectors=2^{s.kxT + s.kzT}")


def main():
    for n in (3, 4, 5):
        c = repetition_code(n)
        q = hgp(c, c)
        print(f"toric code from rep({n}): [[{q.n},{q.k},{q.d}]]")
    print()
    show("rep(8) x rep(8)", repetition_code(8), repetition_code(8))
    show("rep-open(8) x rep-open(8)", repetition_code(8, cyclic=False), repetition_code(8, cyclic=False))
    show("ldpc(40) x rep(6)", random_typical_ldpc(40, 3, 4, seed=1), repetition_code(6))
    show("pinwheel(N=3, p=7) x rep(6)", pinwheel_code(3, 7), repetition_code(6))


if __name__ == "__main__":
    main()
