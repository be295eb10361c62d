"""Where the privacy defect comes from: leakage vs overlap excess.

Usage: python demos/defect_anatomy.py

For two inputs h apart, the defect decomposes into (a) support leakage, the
mass one input places on outputs the other cannot emit at all, and (b)
overlap excess, the positive part of the mass beyond e^eps times the
reference on shared outputs.  This script prints the split per separation
and shows the Gaussian threshold index that decides which overlap terms are
live.
"""

import math

from sparseldp import Kernel, gaussian_overlap_threshold, separation_breakdown

EPS = 1.0

print("Laplace lam=0.5, radius t=3 (s=7): per-separation split at eps=1")
print(f"{'h':>3} {'delta_h':>9} {'leakage':>9} {'overlap':>9}")
lap = Kernel.laplace(0.5)
for h in range(0, 8):
    b = separation_breakdown(lap, EPS, 3, h)
    print(f"{h:>3} {b.total:>9.4f} {b.support_leakage:>9.4f} {b.overlap_excess:>9.4f}")
print("h=7 exceeds twice the radius: the windows are disjoint and everything leaks.")

print("\nGaussian sigma=2, radius t=3: same split")
gau = Kernel.gaussian(2.0)
for h in range(0, 8):
    b = separation_breakdown(gau, EPS, 3, h)
    print(f"{h:>3} {b.total:>9.4f} {b.support_leakage:>9.4f} {b.overlap_excess:>9.4f}")

# The overlap excess at separation h is carried exactly by the offsets k
# strictly below h/2 - sigma^2 eps / h.
h = 3
kappa = gaussian_overlap_threshold(h, 2.0, EPS)
print(f"\nGaussian overlap threshold at h={h}: kappa = {kappa:.4f}")
print(f"{'k':>3} {'term':>10} {'k < kappa':>10}")
for k in range(h - 3, 4):
    term = gau.weight(abs(k)) - math.exp(EPS) * gau.weight(abs(k - h))
    print(f"{k:>3} {term:>10.5f} {str(k < kappa):>10}")
print("Only offsets below the threshold contribute positive overlap terms, and the")
print("threshold moves right as the radius grows, which is why the Gaussian family")
print("cannot push its defect arbitrarily low by enlarging the support.")
