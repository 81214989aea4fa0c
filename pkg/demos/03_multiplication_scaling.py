"""
How the cost of a product grows with the size of its inputs.

Run: python demos/03_multiplication_scaling.py
"""

from __future__ import annotations

import numpy as np

from bvgroup.bench import loglog_slope, run_benchmark

sizes = [16, 32, 64, 128]

# %% Full products (reduced, normal form) and deferred ones
nf = run_benchmark(sizes, trials=3, mode="nf")
fast = run_benchmark(sizes, trials=3, mode="fast")
print(f"{'size':>5} {'input bits':>11} {'nf ms':>9} {'fast ms':>9}")
for a, b in zip(nf, fast):
    print(f"{a.size:>5} {a.median_bits:>11.0f} {a.median_micros / 1e3:>9.2f} {b.median_micros / 1e3:>9.2f}")

# %% Fitted exponents against total input bit length
print(f"\nslope nf:   {loglog_slope(nf):.2f}")
print(f"slope fast: {loglog_slope(fast):.2f}")

# %% Local exponents between consecutive sizes
bits = np.array([r.median_bits for r in nf])
t = np.array([r.median_micros for r in nf])
print("local nf exponents:", np.round(np.diff(np.log(t)) / np.diff(np.log(bits)), 2))
