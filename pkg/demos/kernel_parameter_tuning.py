"""Tuning the kernel parameter at fixed sparsity.

Usage: python demos/kernel_parameter_tuning.py

With the support size pinned at s=7 and privacy enforced over separations up
to 2, the kernel parameter trades two failure modes against each other: a
diffuse kernel leaks mass through the window edges, a concentrated one blows
up the likelihood ratio on the overlap.  The exact defect therefore has an
interior minimum in the parameter, while distortion moves monotonically.
"""

import numpy as np

from sparseldp import sweep_param

EPS, RANGE, S = 1.0, 2, 7

for family, grid in (
    ("laplace", [0.2, 0.4, 0.6, 0.8, 1.0, 1.2]),
    ("gaussian", [0.8, 1.0, 1.2, 1.5, 2.0, 2.5, 3.0]),
):
    rows = sweep_param(family, grid, EPS, RANGE, S)
    print(f"\n{family} parameter sweep (eps={EPS}, range={RANGE}, s={S})")
    print(f"{'param':>6} {'delta*':>8} {'r1':>8} {'r2':>8}")
    for row in rows:
        print(f"{row.varied:>6g} {row.delta_star:>8.4f} {row.r1:>8.4f} {row.r2:>8.4f}")
    best = rows[int(np.argmin([r.delta_star for r in rows]))]
    print(f"defect minimized at param={best.varied:g}, an interior point of the grid;")
    print("distortion keeps falling (laplace) or rising (gaussian) past it, so the")
    print("parameter and the support size have to be designed jointly.")
