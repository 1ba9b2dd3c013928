"""Path decompositions: validation, nice form, bag unions, exact pathwidth."""
from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph, is_vertex_cut


class DecompositionError(ValueError):
    """Invalid decomposition. ``kind`` is one of D1, D2, D3, D4, range,
    missing-vertex, format."""

    def __init__(self, kind: str, message: str, witness=None):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


class PathDecomposition:
    """Bags ``X_1..X_k`` of ``graph``; the empty ``X_0`` and ``X_{k+1}`` are implicit.

    Bag indices in the public API are 1-based so that they line up with the
    sentinels: ``bag(0) == bag(k + 1) == ()``.
    """

    def __init__(self, graph: Graph, bags: Iterable[Iterable[int]]):
        self.graph = graph
        self.bags: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(set(b))) for b in bags)
        self.first: list[int] = [0] * graph.n
        self.last: list[int] = [0] * graph.n
        self._validate()

    def _validate(self) -> None:
        g = self.graph
        first, last = self.first, self.last
        for i, bag in enumerate(self.bags, start=1):
            for v in bag:
                if not 0 <= v < g.n:
                    raise DecompositionError("range", f"bag {i}: vertex {v} outside [0, {g.n})", v)
                if first[v] == 0:
                    first[v] = i
                elif last[v] != i - 1:
                    raise DecompositionError(
                        "D2", f"vertex {v} appears in bags {last[v]} and {i} but not in between",
                        (v, last[v], i))
                last[v] = i
        for v in range(g.n):
            if first[v] == 0:
                raise DecompositionError("missing-vertex", f"vertex {v} is in no bag", v)
        for u, v in g.edges():
            # intervals [first, last] must overlap
            if max(first[u], first[v]) > min(last[u], last[v]):
                raise DecompositionError("D1", f"edge {u} {v} is not contained in any bag", (u, v))

    @property
    def k(self) -> int:
        return len(self.bags)

    def bag(self, i: int) -> tuple[int, ...]:
        if i == 0 or i == self.k + 1:
            return ()
        if not 0 < i <= self.k:
            raise IndexError(f"bag index {i} outside [0, {self.k + 1}]")
        return self.bags[i - 1]

    def width(self) -> int:
        if not self.bags:
            if self.graph.n:
                raise DecompositionError("format", "empty decomposition of a nonempty graph")
            return 0
        return max(len(b) for b in self.bags) - 1

    def is_nice(self) -> bool:
        bags = ((),) + self.bags + ((),)
        for i in range(1, len(bags) - 1):
            if not bags[i]:
                return False
        for a, b in zip(bags, bags[1:]):
            if abs(len(a) - len(b)) != 1 or not (set(a) <= set(b) or set(b) <= set(a)):
                return False
        return True

    def serialize(self) -> bytes:
        return "".join(" ".join(map(str, b)) + "\n" for b in self.bags).encode("ascii")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathDecomposition):
            return NotImplemented
        return self.graph == other.graph and self.bags == other.bags

    def __repr__(self) -> str:
        return f"{type(self).__name__}(k={self.k}, width={self.width()})"


class NicePathDecomposition(PathDecomposition):
    """Adds D3 (no empty interior bag) and D4 (one insertion or deletion per step)."""

    def __init__(self, graph: Graph, bags: Iterable[Iterable[int]]):
        super().__init__(graph, bags)
        padded = ((),) + self.bags + ((),)
        for i in range(1, len(padded) - 1):
            if not padded[i]:
                raise DecompositionError("D3", f"bag {i} is empty", i)
        for i, (a, b) in enumerate(zip(padded, padded[1:])):
            sa, sb = set(a), set(b)
            if not (len(sb ^ sa) == 1 and (sa <= sb or sb <= sa)):
                raise DecompositionError("D4", f"bags {i} and {i + 1} differ by more than one vertex", i)
        # vertex introduced at each step (at most one), for O(answer) prefix unions
        self._introduced: list[int] = [-1] * (self.k + 2)
        for v in range(graph.n):
            self._introduced[self.first[v]] = v

    def prefix_union(self, i: int, j: int) -> frozenset[int]:
        """``X_i ∪ ... ∪ X_j`` for ``0 <= i <= j <= k + 1``."""
        if not 0 <= i <= j <= self.k + 1:
            raise IndexError(f"need 0 <= i <= j <= {self.k + 1}, got {i}, {j}")
        out = set(self.bag(i))
        intro = self._introduced
        for tau in range(i + 1, min(j, self.k) + 1):
            if intro[tau] >= 0:
                out.add(intro[tau])
        return frozenset(out)

    def classify_bag(self, t: int) -> str:
        """``"end-set"`` or ``"cut"`` for interior bag ``t`` of a connected graph."""
        if not 1 <= t <= self.k:
            raise IndexError(f"bag index {t} outside [1, {self.k}]")
        bag = set(self.bag(t))
        left = self.prefix_union(0, t - 1) if t > 1 else frozenset()
        right = self.prefix_union(t + 1, self.k + 1) if t < self.k else frozenset()
        if left <= bag or right <= bag:
            return "end-set"
        if not is_vertex_cut(self.graph, bag):
            raise DecompositionError(
                "cut-check", f"bag {t} is neither an end set nor a vertex cut", t)
        return "cut"


def prefix_union(pd: NicePathDecomposition, i: int, j: int) -> frozenset[int]:
    return pd.prefix_union(i, j)


def classify_bag(pd: NicePathDecomposition, t: int) -> str:
    return pd.classify_bag(t)


def width(pd: PathDecomposition) -> int:
    return pd.width()


def parse_decomposition(text: bytes | str, g: Graph) -> PathDecomposition:
    """One bag per line, space separated vertex ids."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise DecompositionError("format", "decomposition is not ASCII") from exc
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    bags = []
    for lineno, line in enumerate(lines, start=1):
        parts = line.split(" ") if line else []
        if not parts or not all(p.isdigit() for p in parts):
            raise DecompositionError("format", f"line {lineno}: expected vertex ids, got {line!r}")
        bags.append([int(p) for p in parts])
    return PathDecomposition(g, bags)


def make_nice(pd: PathDecomposition) -> NicePathDecomposition:
    """Nice decomposition of the same width.

    Between consecutive bags, vertices leaving are deleted first (ascending
    id), then arriving vertices are inserted (ascending id). When two
    consecutive bags are disjoint (disconnected graphs only) one arriving
    vertex is inserted before the last departing vertex is deleted, which
    needs width at least one.
    """
    g = pd.graph
    out: list[tuple[int, ...]] = []
    cur: list[int] = []

    def emit():
        out.append(tuple(sorted(cur)))

    targets = [b for b in pd.bags if b] + [()]
    for target in targets:
        tset = set(target)
        leaving = sorted(v for v in cur if v not in tset)
        arriving = sorted(v for v in target if v not in set(cur))
        bridge = bool(leaving) and bool(arriving) and len(leaving) == len(cur)
        for v in (leaving[:-1] if bridge else leaving):
            cur.remove(v)
            emit()
        if bridge:
            cur.append(arriving[0])
            emit()
            cur.remove(leaving[-1])
            emit()
            arriving = arriving[1:]
        for v in arriving:
            cur.append(v)
            emit()
    if out and not out[-1]:
        out.pop()
    nice = NicePathDecomposition(g, out)
    if g.n and nice.width() > max(pd.width(), 1 if _needs_bridge(pd) else 0):
        raise AssertionError("make_nice increased the width")  # pragma: no cover
    return nice


def _needs_bridge(pd: PathDecomposition) -> bool:
    bags = [set(b) for b in pd.bags if b]
    return any(not (a & b) for a, b in zip(bags, bags[1:]))


# ---------------------------------------------------------------------------
# Exact pathwidth for small graphs
# ---------------------------------------------------------------------------

class BudgetExceeded(ValueError):
    pass


def decomposition_from_order(g: Graph, order: Sequence[int]) -> PathDecomposition:
    """Bag ``i`` holds ``order[i]`` plus earlier vertices with a neighbour at or after ``i``."""
    pos = {v: i for i, v in enumerate(order)}
    reach = [max([pos[x] for x in g.adj[v]] + [pos[v]]) for v in range(g.n)]
    bags = []
    active: list[int] = []
    for i, v in enumerate(order):
        active = [u for u in active if reach[u] >= i]
        bags.append(active + [v])
        active.append(v)
    return PathDecomposition(g, bags)


def exact_pathwidth(g: Graph, max_n: int = 12) -> tuple[int, PathDecomposition]:
    """Minimum width over vertex layouts, by dynamic programming over subsets.

    Pathwidth equals the vertex separation number: the least, over orderings,
    of the largest number of placed vertices that still have an unplaced
    neighbour.
    """
    n = g.n
    if n > max_n:
        raise BudgetExceeded(f"exact pathwidth limited to n <= {max_n}, got n = {n}")
    if n == 0:
        return 0, PathDecomposition(g, [])
    nbr = [sum(1 << x for x in g.adj[v]) for v in range(n)]
    full = (1 << n) - 1
    size = 1 << n
    INF = n + 1
    best = [INF] * size
    choice = [-1] * size
    best[0] = 0
    for mask in range(1, size):
        outside = full & ~mask
        boundary = 0
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if nbr[v] & outside:
                boundary += 1
            m ^= low
        sub_best = INF
        sub_v = -1
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            cand = best[mask ^ low]
            if cand < sub_best:
                sub_best, sub_v = cand, v
            m ^= low
        best[mask] = max(boundary, sub_best)
        choice[mask] = sub_v
    order = []
    mask = full
    while mask:
        v = choice[mask]
        order.append(v)
        mask ^= 1 << v
    order.reverse()
    pd = decomposition_from_order(g, order)
    assert pd.width() <= best[full]
    return best[full], pd
