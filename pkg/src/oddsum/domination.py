"""Odd-dominating sets as solutions of ``(A + I) x = 1`` over GF(2).

Rows are Python ints, so row operations are word-level XORs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator

from oddsum.graph import Graph, VertexSet, iter_bits, popcount

DEFAULT_CAP = 1 << 20
BRUTE_FORCE_MAX_N = 24


def default_cap() -> int:
    raw = os.environ.get("ODDSUM_CAP")
    return int(raw) if raw else DEFAULT_CAP


class SolutionSpaceTooLarge(Exception):
    """The affine solution space has more members than the caller allowed."""

    def __init__(self, nullity: int, cap: int):
        super().__init__(f"space too large: nullity {nullity} gives 2^{nullity} sets, cap is {cap}")
        self.nullity = nullity
        self.cap = cap


class InconsistentSystem(RuntimeError):
    pass


@dataclass(frozen=True)
class GF2System:
    n: int
    matrix: tuple[int, ...]
    particular: VertexSet
    basis: tuple[VertexSet, ...] = field(default_factory=tuple)

    @property
    def nullity(self) -> int:
        return len(self.basis)

    @property
    def count(self) -> int:
        return 1 << self.nullity

    def apply(self, x: int) -> int:
        """``(A + I) x`` as a bitmask."""
        out = 0
        for i, row in enumerate(self.matrix):
            if popcount(row & x) & 1:
                out |= 1 << i
        return out


def closed_neighborhood_matrix(g: Graph) -> tuple[int, ...]:
    return tuple(g.closed_mask(v) for v in range(g.n))


def solve_odd_domination(g: Graph) -> GF2System:
    n = g.n
    matrix = closed_neighborhood_matrix(g)
    rhs_bit = 1 << n
    rows = [row | rhs_bit for row in matrix]
    pivots: list[int] = []  # pivot column of each reduced row, in order
    r = 0
    for col in range(n):
        bit = 1 << col
        for i in range(r, n):
            if rows[i] & bit:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        for j in range(n):
            if j != r and rows[j] & bit:
                rows[j] ^= prow
        pivots.append(col)
        r += 1
    for j in range(r, n):
        if rows[j] & rhs_bit:
            raise InconsistentSystem(
                "closed-neighborhood system has no solution; every graph should have one"
            )
    pivot_mask = 0
    for col in pivots:
        pivot_mask |= 1 << col
    particular = 0
    for i, col in enumerate(pivots):
        if rows[i] & rhs_bit:
            particular |= 1 << col
    basis = []
    for f in range(n):
        if pivot_mask >> f & 1:
            continue
        vec = 1 << f
        for i, col in enumerate(pivots):
            if rows[i] >> f & 1:
                vec |= 1 << col
        basis.append(VertexSet(n, vec))
    return GF2System(n, matrix, VertexSet(n, particular), tuple(basis))


def count_odd_dominating_sets(g: Graph) -> int:
    return solve_odd_domination(g).count


def iter_solutions(system: GF2System, cap: int | None = None) -> Iterator[VertexSet]:
    """Gray-code walk over the solution space, starting at the particular solution."""
    cap = default_cap() if cap is None else cap
    k = system.nullity
    if (1 << k) > cap:
        raise SolutionSpaceTooLarge(k, cap)
    basis = [b.bits for b in system.basis]
    cur = system.particular.bits
    yield VertexSet(system.n, cur)
    for i in range(1, 1 << k):
        cur ^= basis[(i & -i).bit_length() - 1]
        yield VertexSet(system.n, cur)


def enumerate_odd_dominating_sets(g: Graph, cap: int | None = None) -> list[VertexSet]:
    return list(iter_solutions(solve_odd_domination(g), cap))


def odd_domination_violations(g: Graph, s: VertexSet) -> list[int]:
    return [v for v in range(g.n) if not popcount(g.closed_mask(v) & s.bits) & 1]


def is_odd_dominating(g: Graph, s: VertexSet) -> tuple[bool, list[int]]:
    bad = odd_domination_violations(g, s)
    return not bad, bad


def forced_excluded_vertices(g: Graph) -> VertexSet:
    """Vertices x with N[w] = N[v] + {x} for some v, w; no odd-dominating set holds them."""
    out = 0
    closed = [g.closed_mask(v) for v in range(g.n)]
    for w in range(g.n):
        nw = closed[w]
        for v in iter_bits(g.adj[w]):
            nv = closed[v]
            if nv & ~nw:
                continue
            extra = nw ^ nv
            if extra and not extra & (extra - 1):
                out |= extra
    return VertexSet(g.n, out)


def brute_force_odd_dominating_sets(g: Graph) -> list[VertexSet]:
    """Every subset, checked directly; ascending by bit pattern."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {g.n}")
    # Walk subsets in Gray-code order, keeping the parity vector of |N[x] & S|
    # for all x; since A + I is symmetric, toggling v flips exactly N[v].
    full = (1 << g.n) - 1
    closed = [g.closed_mask(v) for v in range(g.n)]
    parity = 0
    subset = 0
    found = [0] if g.n == 0 else []
    for i in range(1, 1 << g.n):
        v = (i & -i).bit_length() - 1
        subset ^= 1 << v
        parity ^= closed[v]
        if parity == full:
            found.append(subset)
    return [VertexSet(g.n, bits) for bits in sorted(found)]
