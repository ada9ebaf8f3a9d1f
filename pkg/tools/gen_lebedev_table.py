"""Regenerate ``src/mcxc/angular/_lebedev_table.py`` from SciPy's Lebedev rules.

Only one representative per octahedral orbit is stored (components sorted as
a >= b >= c >= 0, plus the per-point weight normalized to a unit sum).  The
package expands the orbits itself with exact sign flips and permutations, so
symmetry partners cancel bit-for-bit.

Run once with SciPy >= 1.15 available::

    python tools/gen_lebedev_table.py
"""
from pathlib import Path

import numpy as np
from scipy.integrate import lebedev_rule

ORDERS = (3, 5, 7, 9, 11, 17, 23, 29, 35, 41, 47, 53, 59)
TARGET = Path(__file__).resolve().parents[1] / "src" / "mcxc" / "angular" / "_lebedev_table.py"


def orbits(order):
    x, w = lebedev_rule(order)
    w = w / (4.0 * np.pi)
    reps = {}
    for p, wt in zip(np.sort(np.abs(x), axis=0)[::-1].T, w):
        key = tuple(np.round(p, 12))
        if key not in reps:
            reps[key] = (tuple(float(v) for v in p), float(wt))
    return list(reps.values())


def main():
    lines = [
        "# Generated by tools/gen_lebedev_table.py; do not edit.",
        "# order -> [((a, b, c), weight), ...] with a >= b >= c >= 0, weights per point.",
        "ORBITS = {",
    ]
    for order in ORDERS:
        lines.append(f"    {order}: [")
        for (a, b, c), wt in orbits(order):
            lines.append(f"        (({a!r}, {b!r}, {c!r}), {wt!r}),")
        lines.append("    ],")
    lines.append("}")
    TARGET.write_text("\n".join(lines) + "\n")
    print(f"wrote {TARGET}")


if __name__ == "__main__":
    main()
