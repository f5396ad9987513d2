"""Odd-sum chromatic number.

The solver minimises ``chi(G[D]) + chi(G - D)`` over odd-dominating sets ``D``.
``oracle_odd_sum_chromatic`` instead searches colorings directly from the
definition and never looks at odd-dominating sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

from oddsum.coloring import DEFAULT_NODE_BUDGET, chromatic_number
from oddsum.domination import is_odd_dominating, iter_solutions, solve_odd_domination
from oddsum.graph import Graph, VertexSet

ORACLE_MAX_N = 8


class Violation(NamedTuple):
    kind: str  # "proper" for a monochromatic edge, "parity" for an even closed sum
    vertices: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class OddSumCertificate:
    chios: int
    dominating_set: VertexSet
    coloring: tuple[int, ...]

    @property
    def parity_partition(self) -> tuple[VertexSet, VertexSet]:
        n = len(self.coloring)
        odd = VertexSet.of(n, (v for v, c in enumerate(self.coloring) if c % 2))
        return odd, odd.complement()

    def to_json_dict(self) -> dict:
        return {
            "chios": self.chios,
            "D": self.dominating_set.to_list(),
            "colors": {str(v): c for v, c in enumerate(self.coloring)},
        }


def _as_tuple(g: Graph, f: Sequence[int] | Mapping[int, int]) -> tuple[int, ...]:
    if isinstance(f, Mapping):
        missing = [v for v in range(g.n) if v not in f]
        if missing:
            raise ValueError(f"coloring is not total; missing vertices {missing}")
        f = [f[v] for v in range(g.n)]
    f = tuple(int(c) for c in f)
    if len(f) != g.n:
        raise ValueError(f"coloring has {len(f)} entries for {g.n} vertices")
    if any(c < 1 for c in f):
        raise ValueError("colors must be positive integers")
    return f


def validate_odd_sum_coloring(g: Graph, f: Sequence[int] | Mapping[int, int]) -> tuple[bool, list[Violation]]:
    f = _as_tuple(g, f)
    bad: list[Violation] = []
    for u, v in g.edges():
        if f[u] == f[v]:
            bad.append(Violation("proper", (u, v), f"both endpoints colored {f[u]}"))
    for v in range(g.n):
        total = f[v] + sum(f[u] for u in g.neighbors(v))
        if total % 2 == 0:
            bad.append(Violation("parity", (v,), f"closed-neighborhood sum {total} is even"))
    return not bad, bad


def normalize_coloring(f: Sequence[int], g: Graph | None = None) -> tuple[int, ...]:
    """Relabel odd colors onto 1,3,5,... and even colors onto 2,4,6,..., keeping order."""
    f = tuple(int(c) for c in f)
    if any(c < 1 for c in f):
        raise ValueError("colors must be positive integers")
    if g is not None:
        ok, bad = validate_odd_sum_coloring(g, f)
        if not ok:
            raise ValueError(f"not an odd-sum coloring: {bad[0].detail}")
    odd = sorted({c for c in f if c % 2})
    even = sorted({c for c in f if c % 2 == 0})
    remap = {c: 2 * i + 1 for i, c in enumerate(odd)}
    remap.update({c: 2 * i + 2 for i, c in enumerate(even)})
    return tuple(remap[c] for c in f)


def coloring_from_partition(
    g: Graph, d: VertexSet, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, ...]:
    ok, _ = is_odd_dominating(g, d)
    if not ok:
        raise ValueError(f"{d} is not odd-dominating")
    colors = [0] * g.n
    for part, parity in ((d, 1), (d.complement(), 0)):
        sub, back = g.induced(part)
        _, witness = chromatic_number(sub, node_budget)
        for i, c in enumerate(witness.assignment):
            colors[back[i]] = 2 * c - parity
    return tuple(colors)


def odd_sum_chromatic(
    g: Graph, cap: int | None = None, node_budget: int = DEFAULT_NODE_BUDGET
) -> OddSumCertificate:
    if g.n == 0:
        return OddSumCertificate(0, VertexSet(0), ())
    system = solve_odd_domination(g)
    best = None
    best_d = None
    for d in iter_solutions(system, cap):
        chi_d = chromatic_number(g.induced(d)[0], node_budget)[0]
        rest = d.complement()
        if best is not None and chi_d + (1 if len(rest) else 0) >= best:
            continue
        total = chi_d + chromatic_number(g.induced(rest)[0], node_budget)[0]
        if best is None or total < best:
            best, best_d = total, d
    coloring = coloring_from_partition(g, best_d, node_budget)
    return OddSumCertificate(best, best_d, coloring)


def oracle_odd_sum_chromatic(g: Graph) -> int:
    """Fewest colors in any odd-sum coloring, by exhaustive search over colorings.

    Permuting the odd colors among themselves (or the even ones) keeps a
    coloring proper and keeps every closed-neighborhood parity, so it suffices
    to search colorings where each parity class introduces its colors in
    increasing order: 1, 3, 5, ... and 2, 4, 6, ...  These all lie in 1..2n.
    """
    n = g.n
    if n > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_N}, got {n}")
    if n == 0:
        return 0
    nbrs = [g.neighbors(v) for v in range(n)]
    closes_at: list[list[int]] = [[] for _ in range(n)]
    for x in range(n):
        closes_at[max([x] + nbrs[x])].append(x)
    color = [0] * n
    best = [n + 1]

    def place(v: int, n_odd: int, n_even: int) -> None:
        if n_odd + n_even >= best[0]:
            return
        if v == n:
            best[0] = n_odd + n_even
            return
        options = [2 * i + 1 for i in range(n_odd + 1)] + [2 * j + 2 for j in range(n_even + 1)]
        for c in options:
            if any(color[u] == c for u in nbrs[v] if u < v):
                continue
            color[v] = c
            if all((color[x] + sum(color[u] for u in nbrs[x])) % 2 for x in closes_at[v]):
                place(
                    v + 1,
                    n_odd + (c == 2 * n_odd + 1),
                    n_even + (c == 2 * n_even + 2),
                )
            color[v] = 0

    place(0, 0, 0)
    if best[0] > n:
        raise RuntimeError("no odd-sum coloring found")
    return best[0]
