"""Immutable simple graphs over dense vertex ids, with int bitset adjacency."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class _Infinite:
    """Girth of an acyclic graph."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("INFINITE")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True


INFINITE = _Infinite()


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``range(n)`` stored as an int bitmask."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits exceed vertex range 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range 0..{n - 1}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.bits >> v & 1)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) ^ self.bits)

    def to_list(self) -> list[int]:
        return list(self)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


def popcount(x: int) -> int:
    return x.bit_count()


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    ``labels`` is either ``None`` or a tuple of strings, one per vertex.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adj) != n:
            raise ValueError("adjacency length must equal n")
        adj = tuple(adj)
        for v, row in enumerate(adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row < 0 or row >> n:
                raise ValueError(f"neighbor of {v} out of range")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels must cover exactly the vertex range")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def label(self, v: int) -> str | None:
        return None if self.labels is None else self.labels[v]

    def find(self, label: str) -> int:
        """Lowest vertex carrying ``label``."""
        if self.labels is not None:
            for v, lab in enumerate(self.labels):
                if lab == label:
                    return v
        raise KeyError(label)

    def find_all(self, label: str) -> list[int]:
        if self.labels is None:
            return []
        return [v for v, lab in enumerate(self.labels) if lab == label]

    def induced(self, s: VertexSet | Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled densely; also returns the new->old map."""
        vertices = list(s) if not isinstance(s, VertexSet) else s.to_list()
        index = {v: i for i, v in enumerate(vertices)}
        mask = 0
        for v in vertices:
            mask |= 1 << v
        adj = []
        for v in vertices:
            row = 0
            for u in iter_bits(self.adj[v] & mask):
                row |= 1 << index[u]
            adj.append(row)
        labels = None if self.labels is None else [self.labels[v] for v in vertices]
        return Graph(len(vertices), adj, labels), vertices

    def with_labels(self, labels: Sequence[str] | None) -> "Graph":
        return Graph(self.n, self.adj, labels)


def build_graph(n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {(u, v)} has endpoint out of range 0..{n - 1}")
        if u == v:
            raise ValueError(f"edge {(u, v)} is a self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, labels)


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return VertexSet(g.n, g.closed_mask(v))


def girth(g: Graph):
    """Shortest cycle length, or ``INFINITE`` for forests. BFS from every vertex."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in iter_bits(g.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    return INFINITE if best is None else best


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for root in range(g.n):
        if seen >> root & 1:
            continue
        comp = [root]
        seen |= 1 << root
        frontier = 1 << root
        while frontier:
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= g.adj[x]
            nxt &= ~seen
            seen |= nxt
            comp.extend(iter_bits(nxt))
            frontier = nxt
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_bipartite(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """Two-coloring witness ``(A, B)`` or ``None``; each component's lowest vertex goes to A."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in iter_bits(g.adj[x]):
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    a = VertexSet.of(g.n, (v for v in range(g.n) if side[v] == 0))
    return a, a.complement()


def is_biconnected(g: Graph) -> bool:
    """Connected with no cut vertex. Requires ``n >= 3``."""
    if g.n < 3:
        raise ValueError("biconnectivity is defined here only for n >= 3")
    if not is_connected(g):
        return False
    # iterative Tarjan low-link from vertex 0
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    disc[0] = low[0] = timer
    root_children = 0
    stack = [(0, -1, iter(g.neighbors(0)))]
    while stack:
        x, par, it = stack[-1]
        advanced = False
        for y in it:
            if disc[y] == -1:
                timer += 1
                disc[y] = low[y] = timer
                stack.append((y, x, iter(g.neighbors(y))))
                advanced = True
                break
            if y != par:
                low[x] = min(low[x], disc[y])
        if advanced:
            continue
        stack.pop()
        if par == -1:
            continue
        low[par] = min(low[par], low[x])
        if par == 0:
            root_children += 1
        elif low[x] >= disc[par]:
            return False
    return root_children <= 1


def planarity_necessary(g: Graph) -> bool:
    """Euler-type edge bounds every planar graph satisfies (not a planarity test)."""
    if g.n < 3:
        return True
    m = g.num_edges
    if m > 3 * g.n - 6:
        return False
    gam = girth(g)
    if gam is INFINITE:
        return True
    # m <= gam/(gam-2) * (n-2), kept in integers
    return m * (gam - 2) <= gam * (g.n - 2)
