"""Closed-form genus and surface-coloring numbers.

Integer quantities use exact arithmetic (``math.isqrt``, integer ceilings);
only the real-valued lower bound touches floating point.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass


def heawood_number(g: int) -> int:
    """floor((7 + sqrt(1 + 48 g)) / 2)."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    # floor((7 + x) / 2) == floor((7 + floor(x)) / 2) for real x >= 0
    return (7 + math.isqrt(1 + 48 * g)) // 2


def genus_Kn(n: int) -> int:
    """Orientable genus of K_n, ceil((n-3)(n-4)/12); zero for n <= 2."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return 0
    return -(-((n - 3) * (n - 4)) // 12)


def betti_complete_bipartite(m: int, n: int) -> int:
    if m < 1 or n < 1:
        raise ValueError("part sizes must be positive")
    return m * n - (m + n) + 1


def product_genus_bound(n: int) -> int:
    """Upper bound on the genus of K_2 box K_n from the product-genus inequality."""
    if n < 1:
        raise ValueError("n must be positive")
    return 2 * genus_Kn(n) + n * genus_Kn(2) + betti_complete_bipartite(2, n)


@dataclass(frozen=True)
class SurfaceBound:
    g: int
    bound: float
    witness_n: int  # largest odd n with product_genus_bound(n) <= g
    formula_n: int  # floor((1 + sqrt(24 g - 67)) / 2)

    @property
    def consistent(self) -> bool:
        return 2 * self.witness_n >= self.bound and self.witness_n >= self.formula_n - 1


def chios_surface_lower_bound(g: int) -> SurfaceBound:
    """-3 + sqrt(24 g - 67), with the odd n whose K_2 box K_n certifies it."""
    if g < 3:
        raise ValueError(f"bound needs g >= 3 so that 24g - 67 >= 0, got {g}")
    disc = 24 * g - 67
    bound = -3.0 + math.sqrt(disc)
    n = 1
    while product_genus_bound(n + 2) <= g:
        n += 2
    formula_n = (1 + math.isqrt(disc)) // 2
    return SurfaceBound(g, bound, n, formula_n)


def sample_genera(g_max: int, start: int = 30) -> list[int]:
    """30, 60, 120, ... up to ``g_max``."""
    out = []
    g = start
    while g <= g_max:
        out.append(g)
        g *= 2
    return out


def gap_divergence_table(g_max: int, genera: list[int] | None = None) -> list[tuple[int, int, float, float]]:
    """Rows ``(g, heawood, lower_bound, gap)`` on doubling genera from 30."""
    if g_max < 30:
        raise ValueError("g_max must be at least 30")
    rows = []
    for g in genera if genera is not None else sample_genera(g_max):
        h = heawood_number(g)
        b = chios_surface_lower_bound(g).bound
        rows.append((g, h, b, b - h))
    return rows


def table_csv(rows: list[tuple[int, int, float, float]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["g", "heawood", "lower_bound", "gap"])
    for g, h, b, gap in rows:
        w.writerow([g, h, f"{b:.12f}", f"{gap:.12f}"])
    return buf.getvalue()
