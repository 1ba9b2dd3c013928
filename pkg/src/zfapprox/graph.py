"""Simple undirected graphs on dense integer vertex ids.

Vertices are ``0..n-1``. Neighbour lists are kept sorted so that every
iteration order in the library is deterministic.
"""
from __future__ import annotations

from bisect import bisect_left
from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Malformed edge-list input. ``kind`` names the defect, ``line`` is 1-based."""

    def __init__(self, kind: str, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.kind = kind
        self.line = line


class Graph:
    """Immutable simple undirected graph.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.neighbours(1)
    (0, 2)
    """

    __slots__ = ("n", "m", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has a vertex outside [0, {n})")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        self.n = n
        self.m = m
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)

    def neighbours(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def neighbour_set(self, u: int) -> frozenset[int]:
        return frozenset(self.adj[u])

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        if not 0 <= u < self.n:
            return False
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Edge-list I/O
# ---------------------------------------------------------------------------

def _parse_int_pair(line: str, lineno: int, kind: str) -> tuple[int, int]:
    parts = line.split(" ")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(kind, lineno, f"expected two non-negative integers, got {line!r}")
    return int(parts[0]), int(parts[1])


def parse_graph(text: bytes | str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list format.

    Each edge line must satisfy ``0 <= u < v < n``. Raises :class:`ParseError`
    with the offending line number.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("encoding", 1, "input is not ASCII") from exc
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("header", 1, "missing header line")
    n, m = _parse_int_pair(lines[0], 1, "header")
    if len(lines) - 1 != m:
        raise ParseError("edge-count", len(lines) + 1,
                         f"header declares {m} edges, found {len(lines) - 1}")
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = _parse_int_pair(line, lineno, "edge")
        if u >= n or v >= n:
            raise ParseError("vertex-range", lineno, f"vertex id out of range [0, {n})")
        if u == v:
            raise ParseError("self-loop", lineno, f"self-loop at {u}")
        if u > v:
            raise ParseError("edge-order", lineno, f"edge must be written with u < v, got {u} {v}")
        if (u, v) in seen:
            raise ParseError("duplicate-edge", lineno, f"duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def serialize_graph(g: Graph) -> bytes:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return ("\n".join(out) + "\n").encode("ascii")


# ---------------------------------------------------------------------------
# Structural primitives
# ---------------------------------------------------------------------------

def _check_vertices(g: Graph, vs: Iterable[int]) -> None:
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside [0, {g.n})")


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``s`` and the relabelling ``old id -> new id``.

    Relabelling is order preserving (sorted members map to ``0..|s|-1``), so
    "lowest index" rules give the same answer in either id space.
    """
    members = sorted(set(s))
    _check_vertices(g, members)
    index = {v: i for i, v in enumerate(members)}
    edges = []
    for v in members:
        iv = index[v]
        for x in g.adj[v]:
            ix = index.get(x)
            if ix is not None and ix > iv:
                edges.append((iv, ix))
    return Graph(len(members), edges), index


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Components of ``g - removed``, sorted by least member."""
    dead = set(removed)
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root] or root in dead:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for x in g.adj[u]:
                if not seen[x] and x not in dead:
                    seen[x] = True
                    comp.append(x)
                    queue.append(x)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_vertex_cut(g: Graph, c: Iterable[int]) -> bool:
    c = set(c)
    _check_vertices(g, c)
    if len(c) >= g.n:
        raise ValueError("cut must be a proper subset of the vertex set")
    return len(connected_components(g, removed=c)) >= 2


def is_clique(g: Graph, vs: Sequence[int]) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def strong_product(g: Graph, h: Graph) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Strong product with ``(u, u')`` flattened to ``u * h.n + u'``."""
    nh = h.n
    index = {(u, up): u * nh + up for u in range(g.n) for up in range(nh)}
    edges = []
    for u in range(g.n):
        closed_u = (u,) + g.adj[u]
        for up in range(nh):
            closed_up = (up,) + h.adj[up]
            a = u * nh + up
            for v in closed_u:
                for vp in closed_up:
                    b = v * nh + vp
                    if b > a:
                        edges.append((a, b))
    return Graph(g.n * nh, edges), index


# ---------------------------------------------------------------------------
# Proper interval graphs
# ---------------------------------------------------------------------------

def _lexbfs(g: Graph, vertices: Sequence[int], tiebreak: dict[int, int] | None = None) -> list[int]:
    """Lexicographic BFS over ``vertices`` (one connected component).

    With ``tiebreak`` (position in a previous sweep) this is LexBFS+: among
    tied vertices the one appearing last in the previous ordering wins.
    """
    unvisited = set(vertices)
    labels: dict[int, list[int]] = {v: [] for v in vertices}
    order = []
    step = len(vertices)
    while unvisited:
        best = max(unvisited, key=lambda v: (labels[v], tiebreak[v] if tiebreak else -v))
        unvisited.remove(best)
        order.append(best)
        for x in g.adj[best]:
            if x in unvisited:
                labels[x].append(step)
        step -= 1
    return order


def is_umbrella_order(g: Graph, order: Sequence[int]) -> bool:
    """True iff every edge ``v_i v_j`` (i < j) spans a clique ``v_i..v_j``.

    Linear check: right neighbourhoods are contiguous and their right ends
    never decrease.
    """
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    prev_reach = -1
    for i, v in enumerate(order):
        right = sorted(pos[x] for x in g.adj[v] if pos[x] > i)
        reach = right[-1] if right else i
        if right and right != list(range(i + 1, reach + 1)):
            return False
        if reach < prev_reach:
            return False
        prev_reach = reach
    return True


def proper_interval_order(g: Graph) -> list[int] | None:
    """An umbrella ordering of ``g`` or ``None`` if ``g`` is not proper interval.

    Each component is ordered by three LexBFS sweeps (the last two LexBFS+),
    then the concatenated order is verified directly.
    """
    order: list[int] = []
    for comp in connected_components(g):
        members = sorted(comp)
        s1 = _lexbfs(g, members)
        s2 = _lexbfs(g, members, tiebreak={v: i for i, v in enumerate(s1)})
        s3 = _lexbfs(g, members, tiebreak={v: i for i, v in enumerate(s2)})
        order.extend(s3)
    return order if is_umbrella_order(g, order) else None


def _right_reach(g: Graph, order: Sequence[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(order)}
    return [max([pos[x] for x in g.adj[v]] + [i]) for i, v in enumerate(order)]


def minimum_clique_cover_interval(g: Graph, order: Sequence[int]) -> list[tuple[int, ...]]:
    """Minimum edge clique cover of a proper interval graph.

    The maximal cliques are the maximal intervals ``order[i..reach(i)]``;
    each one owns the edge between its two ends, so all of them are needed.
    Isolated vertices contribute nothing.
    """
    if not is_umbrella_order(g, order):
        raise ValueError("order is not an umbrella ordering of the graph")
    reach = _right_reach(g, order)
    cliques = []
    for i, r in enumerate(reach):
        if r > i and (i == 0 or r > reach[i - 1]):
            cliques.append(tuple(order[i:r + 1]))
    return cliques
