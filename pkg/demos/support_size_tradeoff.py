"""Privacy defect vs distortion as the support window grows.

Usage: python demos/support_size_tradeoff.py

Each input x of the window family randomizes over {x-t, ..., x+t} with
kernel-shaped mass, s = 2t + 1 atoms.  Privacy on a range of separations
fails completely until the windows of range-distant inputs overlap; past
that threshold the exact defect falls with s while both distortion moments
rise, which is the whole design tension.
"""

from sparseldp import Kernel, feasibility_min_support, sweep_support


def print_sweep(title, kernel, eps, privacy_range, sizes):
    print(f"\n{title}  (eps={eps}, param={kernel.param}, range={privacy_range})")
    print(f"{'s':>4} {'delta*':>8} {'r1':>8} {'r2':>8}")
    for row in sweep_support(kernel, eps, privacy_range, sizes):
        print(f"{int(row.varied):>4} {row.delta_star:>8.4f} {row.r1:>8.4f} {row.r2:>8.4f}")


sizes = [3, 5, 7, 9, 11, 13]
print_sweep("discrete-Laplace support sweep", Kernel.laplace(0.5), 1.0, 3, sizes)
print_sweep("Gaussian support sweep", Kernel.gaussian(2.0), 1.0, 3, sizes + [15])

threshold = feasibility_min_support(3)
print(f"\nSupport sizes below {threshold} cannot overlap at separation 3, so their")
print("defect is exactly 1 regardless of the kernel: the first row above is the")
print("feasibility threshold in action, not a numerical artifact.")

print("\nNote the Gaussian column flattening out near 0.319: enlarging the window")
print("keeps shrinking the leakage, but the quadratic overlap loss grows with the")
print("radius, so the Gaussian defect plateaus instead of falling to zero.")
