"""The zero forcing process: closure, residual white set, canonical arc sets."""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph


@dataclass(frozen=True)
class Colouring:
    blue: frozenset[int]
    white: frozenset[int]
    history: tuple[tuple[int, int], ...]


def _seed(g: Graph, s: Iterable[int]) -> list[bool]:
    blue = [False] * g.n
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside [0, {g.n})")
        blue[v] = True
    return blue


def closure(g: Graph, s: Iterable[int]) -> Colouring:
    """Derived colouring of ``s``.

    Keeps a white-neighbour counter per vertex and a queue of blue vertices
    whose counter hit one, so every edge is touched O(1) times.
    """
    blue = _seed(g, s)
    adj = g.adj
    white_nbrs = [0] * g.n
    queue = deque()
    for u in range(g.n):
        if blue[u]:
            c = sum(1 for x in adj[u] if not blue[x])
            white_nbrs[u] = c
            if c == 1:
                queue.append(u)
    history = []
    while queue:
        u = queue.popleft()
        if white_nbrs[u] != 1:
            continue
        v = next(x for x in adj[u] if not blue[x])
        blue[v] = True
        history.append((u, v))
        c = 0
        for x in adj[v]:
            if blue[x]:
                white_nbrs[x] -= 1
                if white_nbrs[x] == 1:
                    queue.append(x)
            else:
                c += 1
        white_nbrs[v] = c
        if c == 1:
            queue.append(v)
    blue_set = frozenset(v for v in range(g.n) if blue[v])
    white_set_ = frozenset(v for v in range(g.n) if not blue[v])
    return Colouring(blue_set, white_set_, tuple(history))


def white_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Vertices left white after forcing from ``s``; a fort when nonempty."""
    return closure(g, s).white


def is_zero_forcing_set(g: Graph, s: Iterable[int]) -> bool:
    return not closure(g, s).white


def canonical_forces(g: Graph, s: Iterable[int]) -> list[tuple[int, int]]:
    """Forces in the order chosen by the lowest-index-forcer rule.

    One force per step; the forcer is the smallest blue vertex with exactly
    one white neighbour. Raises ``ValueError`` if ``s`` does not force ``g``.
    """
    blue = _seed(g, s)
    adj = g.adj
    white_nbrs = [0] * g.n
    heap: list[int] = []
    for u in range(g.n):
        if blue[u]:
            c = sum(1 for x in adj[u] if not blue[x])
            white_nbrs[u] = c
            if c == 1:
                heap.append(u)
    heapq.heapify(heap)
    forces = []
    remaining = g.n - sum(blue)
    while heap:
        u = heapq.heappop(heap)
        if white_nbrs[u] != 1:
            continue
        v = next(x for x in adj[u] if not blue[x])
        blue[v] = True
        remaining -= 1
        forces.append((u, v))
        c = 0
        for x in adj[v]:
            if blue[x]:
                white_nbrs[x] -= 1
                if white_nbrs[x] == 1:
                    heapq.heappush(heap, x)
            else:
                c += 1
        white_nbrs[v] = c
        if c == 1:
            heapq.heappush(heap, v)
    if remaining:
        raise ValueError(f"not a zero forcing set: {remaining} vertices stay white")
    return forces


def canonical_fas(g: Graph, s: Iterable[int]):
    """The forcing arc set of the canonical process started from ``s``."""
    from .arcs import ArcSet

    return ArcSet(g, canonical_forces(g, s))
