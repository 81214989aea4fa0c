"""
Timing of BV multiplication on random elements.

An element of size ``s`` has random top and bottom trees with ``s`` leaves
and a braid of ``s`` random simple letters with random signs, reduced to
normal form. Its encoding takes about ``h n log2 n`` bits for a braid word
of length ``h`` on ``n`` strands.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass

import numpy as np

from . import braids as br
from . import trees as tr
from .aag import SplitMix64
from .bvcore import BVElement, RawTriple, multiply, reduce

__all__ = ["BenchRow", "random_tree", "random_element", "input_bits", "run_benchmark", "loglog_slope"]


@dataclass(frozen=True)
class BenchRow:
    size: int
    mode: str
    trials: int
    median_micros: float
    median_bits: float


def random_tree(rng: SplitMix64, leaves: int) -> tr.BinaryTree:
    t = tr.LEAF
    for _ in range(leaves - 1):
        t = tr.add_caret(t, rng.below(t.n) + 1)
    return t


def random_element(rng: SplitMix64, size: int) -> BVElement:
    top = random_tree(rng, size)
    bot = random_tree(rng, size)
    letters = []
    for _ in range(size):
        images = list(range(size))
        rng.shuffle(images)
        letters.append((br.SimpleBraid(tuple(images)), 1 if rng.below(2) else -1))
    return reduce(RawTriple(top, br.BraidWord(size, tuple(letters)), bot))


def input_bits(e: BVElement) -> float:
    n = e.n
    return e.braid.length * n * math.log2(n) if n > 1 else 0.0


def run_benchmark(sizes, trials: int = 3, mode: str = "nf", seed: int = 0) -> list[BenchRow]:
    """Median wall time of one product per size; inputs are generated untimed."""
    if mode not in ("nf", "fast"):
        raise ValueError(f"mode must be 'nf' or 'fast', got {mode!r}")
    if trials < 1:
        raise ValueError("need at least one trial")
    rows = []
    for size in sizes:
        if size < 1:
            raise ValueError(f"sizes must be positive, got {size}")
        rng = SplitMix64(seed * 1_000_003 + size)
        times, bits = [], []
        for _ in range(trials):
            a = random_element(rng, size)
            b = random_element(rng, size)
            start = time.perf_counter()
            multiply(a, b, fast=(mode == "fast"))
            times.append(time.perf_counter() - start)
            bits.append(input_bits(a) + input_bits(b))
        rows.append(BenchRow(size, mode, trials, statistics.median(times) * 1e6, statistics.median(bits)))
    return rows


def loglog_slope(rows: list[BenchRow]) -> float:
    """Least-squares slope of log(median time) against log(input bits)."""
    x = np.log([r.median_bits for r in rows])
    y = np.log([r.median_micros for r in rows])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
