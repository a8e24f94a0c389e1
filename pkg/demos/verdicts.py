"""Fracton verdicts for pairs of seed families.

Run: python demos/verdicts.py
"""

from __future__ import annotations

import itertools

from fractonprod import diagnostics as dg


def main():
    diag = {name: dg.diagnose_family(name) for name in dg.SEED_FAMILY_NAMES}
    for name, d in diag.items():
        c = d.confinement
        print(
            f"{name:13s} rank exponent {d.rank_exponent:5.2f}  "
            f"confinement envelope {c.first:g} -> {c.last:g}  "
            f"max Ising cycle rank {d.isolability.max_cycle_rank}"
        )
    print()
    for a, b in itertools.combinations_with_replacement(dg.SEED_FAMILY_NAMES, 2):
        print(f"{a} x {b}: {dg.fracton_verdict(diag[a], diag[b]).classification}")


if __name__ == "__main__":
    main()
