"""Exact chromatic number by DSATUR branch and bound.

Each connected component is solved separately; components that are edgeless
or bipartite are settled without search.
"""

from __future__ import annotations

from dataclasses import dataclass

from oddsum.graph import Graph, VertexSet, components, is_bipartite, iter_bits, popcount

DEFAULT_NODE_BUDGET = 10**8
BRUTE_FORCE_MAX_N = 12


class NodeBudgetExceeded(Exception):
    def __init__(self, budget: int):
        super().__init__(f"branch-and-bound exceeded its node budget of {budget}")
        self.budget = budget


@dataclass(frozen=True)
class ProperColoring:
    assignment: tuple[int, ...]  # colors start at 1
    k: int

    def is_valid(self, g: Graph) -> bool:
        if len(self.assignment) != g.n:
            return False
        if set(self.assignment) != set(range(1, self.k + 1)):
            return False
        return all(self.assignment[u] != self.assignment[v] for u, v in g.edges())

    def to_json_dict(self) -> dict:
        return {"colors": {str(v): c for v, c in enumerate(self.assignment)}, "k": self.k}


def greedy_clique(g: Graph, vertices: list[int] | None = None) -> list[int]:
    """A clique found greedily from each start vertex; a lower bound on chi."""
    vertices = list(range(g.n)) if vertices is None else vertices
    best: list[int] = []
    for start in vertices:
        clique = [start]
        cand = g.adj[start]
        while cand:
            v = max(iter_bits(cand), key=lambda u: (popcount(g.adj[u] & cand), -u))
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def dsatur_greedy(g: Graph, vertices: list[int]) -> dict[int, int]:
    """One DSATUR pass (colors from 0); an upper bound on chi."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    color: dict[int, int] = {}
    sat = {v: 0 for v in vertices}  # bitmask of neighbor colors
    uncolored = set(vertices)
    while uncolored:
        v = max(uncolored, key=lambda u: (popcount(sat[u]), popcount(g.adj[u] & mask), -u))
        used = sat[v]
        c = 0
        while used >> c & 1:
            c += 1
        color[v] = c
        uncolored.discard(v)
        for u in iter_bits(g.adj[v] & mask):
            if u in uncolored:
                sat[u] |= 1 << c
    return color


class _Search:
    def __init__(self, g: Graph, vertices: list[int], budget: int, nodes_used: int):
        self.g = g
        self.vertices = vertices
        self.mask = 0
        for v in vertices:
            self.mask |= 1 << v
        self.budget = budget
        self.nodes = nodes_used

    def run(self, lower: int, upper: int, incumbent: dict[int, int]) -> tuple[int, dict[int, int]]:
        self.best_k = upper
        self.best = dict(incumbent)
        self.lower = lower
        self.color: dict[int, int] = {}
        self.sat = {v: 0 for v in self.vertices}
        self.deg = {v: popcount(self.g.adj[v] & self.mask) for v in self.vertices}
        self.uncolored = set(self.vertices)
        self._branch(0)
        return self.best_k, self.best

    def _branch(self, used_colors: int) -> bool:
        """Returns True once the lower bound is met, to unwind the search."""
        self.nodes += 1
        if self.nodes > self.budget:
            raise NodeBudgetExceeded(self.budget)
        if not self.uncolored:
            self.best_k = used_colors
            self.best = dict(self.color)
            return self.best_k <= self.lower
        sat, deg = self.sat, self.deg
        v = max(self.uncolored, key=lambda u: (popcount(sat[u]), deg[u], -u))
        forbidden = sat[v]
        self.uncolored.discard(v)
        c = -1
        # only colorings strictly better than the incumbent are explored
        while True:
            c += 1
            if c >= min(used_colors + 1, self.best_k - 1):
                break
            if forbidden >> c & 1:
                continue
            self.color[v] = c
            bit = 1 << c
            touched = []
            for u in iter_bits(self.g.adj[v] & self.mask):
                if u in self.uncolored and not sat[u] & bit:
                    sat[u] |= bit
                    touched.append(u)
            done = self._branch(max(used_colors, c + 1))
            for u in touched:
                sat[u] ^= bit
            del self.color[v]
            if done:
                self.uncolored.add(v)
                return True
        self.uncolored.add(v)
        return False


def _color_component(g: Graph, comp: list[int], budget: int, nodes_used: int) -> tuple[int, dict[int, int], int]:
    if len(comp) == 1:
        return 1, {comp[0]: 0}, nodes_used
    sub, back = g.induced(comp)
    parts = is_bipartite(sub)
    if parts is not None:
        a, _ = parts
        return 2, {back[i]: (0 if i in a else 1) for i in range(sub.n)}, nodes_used
    greedy = dsatur_greedy(g, comp)
    upper = max(greedy.values()) + 1
    lower = max(3, len(greedy_clique(g, comp)))
    if lower >= upper:
        return upper, greedy, nodes_used
    search = _Search(g, comp, budget, nodes_used)
    k, best = search.run(lower, upper, greedy)
    return k, best, search.nodes


def chromatic_number(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, ProperColoring]:
    """Exact chi(G) and a coloring with exactly that many colors."""
    assignment = [0] * g.n
    k = 0
    nodes = 0
    for comp in components(g):
        kc, col, nodes = _color_component(g, comp, node_budget, nodes)
        k = max(k, kc)
        # relabel by first appearance so every component uses 1..kc
        relabel: dict[int, int] = {}
        for v in comp:
            c = col[v]
            if c not in relabel:
                relabel[c] = len(relabel) + 1
            assignment[v] = relabel[c]
    return k, ProperColoring(tuple(assignment), k)


def chromatic_number_induced(g: Graph, s: VertexSet, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    sub, _ = g.induced(s)
    return chromatic_number(sub, node_budget)[0]


def brute_force_chromatic(g: Graph) -> int:
    """Smallest k admitting a proper coloring, by plain backtracking in index order."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {g.n}")
    n = g.n
    if n == 0:
        return 0

    def colorable(k: int) -> bool:
        color = [-1] * n

        def place(v: int, used: int) -> bool:
            if v == n:
                return True
            # a fresh color is only ever the next unused index
            for c in range(min(used + 1, k)):
                if all(color[u] != c for u in iter_bits(g.adj[v]) if u < v):
                    color[v] = c
                    if place(v + 1, max(used, c + 1)):
                        return True
            color[v] = -1
            return False

        return place(0, 0)

    k = 1
    while not colorable(k):
        k += 1
    return k
