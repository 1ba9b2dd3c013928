"""Graph families with matching path decompositions, for tests and benchmarks."""
from __future__ import annotations

import random

from .graph import Graph


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def ladder(rungs: int) -> Graph:
    """``P_rungs x P_2``; rung ``i`` is ``2i -- 2i+1``."""
    edges = [(2 * i, 2 * i + 1) for i in range(rungs)]
    edges += [(2 * i, 2 * i + 2) for i in range(rungs - 1)]
    edges += [(2 * i + 1, 2 * i + 3) for i in range(rungs - 1)]
    return Graph(2 * rungs, edges)


def path_bags(n: int) -> list[list[int]]:
    return [[i, i + 1] for i in range(n - 1)] if n > 1 else [[0]] * n


def cycle_bags(n: int) -> list[list[int]]:
    return [[0, i, i + 1] for i in range(1, n - 1)]


def ladder_bags(rungs: int) -> list[list[int]]:
    if rungs == 1:
        return [[0, 1]]
    bags = []
    for i in range(rungs - 1):
        bags.append([2 * i, 2 * i + 1, 2 * i + 2])
        bags.append([2 * i + 1, 2 * i + 2, 2 * i + 3])
    return bags


def interval_bags(g: Graph, order: list[int]) -> list[list[int]]:
    """Bags ``order[i..reach(i)]`` for a proper interval ordering; width ``omega - 1``."""
    pos = {v: i for i, v in enumerate(order)}
    reach = [max([pos[x] for x in g.adj[v]] + [i]) for i, v in enumerate(order)]
    bags = []
    for i, r in enumerate(reach):
        if i == 0 or r > reach[i - 1]:
            bags.append(order[i:r + 1])
    return bags


def random_proper_interval(n: int, rng: random.Random, mean_gap: float = 0.45,
                           shuffle: bool = True) -> tuple[Graph, list[int]]:
    """Unit interval graph from random points on a line, and an umbrella order.

    Consecutive points are at most one apart, so the graph is connected.
    Vertex ids are shuffled unless ``shuffle`` is false.
    """
    xs = [0.0]
    for _ in range(n - 1):
        xs.append(xs[-1] + min(1.0, rng.expovariate(1.0 / mean_gap)))
    labels = list(range(n))
    if shuffle:
        rng.shuffle(labels)
    edges = []
    for i in range(n):
        j = i + 1
        while j < n and xs[j] - xs[i] <= 1.0:
            a, b = labels[i], labels[j]
            edges.append((min(a, b), max(a, b)))
            j += 1
    return Graph(n, edges), labels


def random_connected(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    if p is None:
        p = rng.random()
    edges = set()
    perm = list(range(n))
    rng.shuffle(perm)
    for i in range(1, n):
        u, v = perm[i], perm[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph(n, sorted(edges))
