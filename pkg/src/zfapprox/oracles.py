"""Brute-force ground truth for small graphs, plus closed forms.

Everything here works on bitmasks and avoids the library's forcing and
arc-set code paths where it can, so the two can be checked against each
other.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .arcs import ArcSet, is_forcing_arc_set
from .decomposition import BudgetExceeded, PathDecomposition, exact_pathwidth
from .forcing import canonical_fas
from .graph import (Graph, connected_components, induced_subgraph, is_vertex_cut,
                    minimum_clique_cover_interval, proper_interval_order, strong_product)

__all__ = [
    "BudgetExceeded", "OracleBudget", "exact_z", "exact_ft", "exact_pw", "z_proper_interval",
    "proper_interval_fas", "cut_bounds", "strong_product_bound", "all_forts", "minimal_forts",
    "max_fort_packing", "min_clique_cover", "closure_mask", "naive_restricted_forcing",
    "brute_force_chain_twist",
]


@dataclass(frozen=True)
class OracleBudget:
    max_n_zexact: int = 16
    max_n_ft: int = 10
    max_n_pw: int = 12

    def __post_init__(self):
        if min(self.max_n_zexact, self.max_n_ft, self.max_n_pw) <= 0:
            raise ValueError("oracle budgets must be positive")


DEFAULT_BUDGET = OracleBudget()


def _masks(g: Graph) -> list[int]:
    return [sum(1 << x for x in g.adj[v]) for v in range(g.n)]


def closure_mask(nbr: list[int], blue: int) -> int:
    """Blue set after exhaustive forcing, by repeated full sweeps."""
    n = len(nbr)
    changed = True
    while changed:
        changed = False
        for u in range(n):
            if blue >> u & 1:
                white = nbr[u] & ~blue
                if white and white & (white - 1) == 0:
                    blue |= white
                    changed = True
    return blue


def _bits(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def exact_z(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, frozenset[int]]:
    """Zero forcing number and a minimum zero forcing set.

    Subsets are tried by increasing size, starting at the minimum degree
    (the first force needs a vertex with all but one neighbour blue).
    Components are solved separately.
    """
    if g.n > budget.max_n_zexact:
        raise BudgetExceeded(f"exact Z limited to n <= {budget.max_n_zexact}, got n = {g.n}")
    total = 0
    witness: set[int] = set()
    for comp in connected_components(g):
        sub, idx = induced_subgraph(g, comp)
        back = sorted(idx, key=idx.get)
        z, s = _exact_z_connected(sub)
        total += z
        witness.update(back[v] for v in s)
    return total, frozenset(witness)


def _exact_z_connected(g: Graph) -> tuple[int, frozenset[int]]:
    n = g.n
    nbr = _masks(g)
    full = (1 << n) - 1
    start = min((g.degree(v) for v in range(n)), default=0)
    start = max(start, 1) if n else 0
    for size in range(start, n + 1):
        for combo in combinations(range(n), size):
            blue = 0
            for v in combo:
                blue |= 1 << v
            if closure_mask(nbr, blue) == full:
                return size, frozenset(combo)
    return n, frozenset(range(n))


def all_forts(g: Graph) -> list[int]:
    """Every fort of ``g`` as a bitmask (exponential; small graphs only)."""
    nbr = _masks(g)
    n = g.n
    forts = []
    for f in range(1, 1 << n):
        ok = True
        for v in range(n):
            if not f >> v & 1:
                inside = nbr[v] & f
                if inside and inside & (inside - 1) == 0:
                    ok = False
                    break
        if ok:
            forts.append(f)
    return forts


def minimal_forts(g: Graph) -> list[int]:
    forts = sorted(all_forts(g), key=lambda f: bin(f).count("1"))
    minimal: list[int] = []
    for f in forts:
        if not any(m & f == m for m in minimal):
            minimal.append(f)
    return minimal


def max_fort_packing(forts: list[int]) -> list[int]:
    """Maximum collection of pairwise disjoint masks, by branch and bound."""
    forts = sorted(set(forts), key=lambda f: (bin(f).count("1"), f))
    best: list[int] = []

    def search(cands: list[int], chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not cands:
            return
        union = 0
        for f in cands:
            union |= f
        smallest = min(bin(f).count("1") for f in cands)
        if len(chosen) + bin(union).count("1") // smallest <= len(best):
            return
        # branch on the lowest vertex covered by a candidate
        v = (union & -union)
        with_v = [f for f in cands if f & v]
        without_v = [f for f in cands if not f & v]
        for f in with_v:
            search([h for h in without_v if not h & f], chosen + [f])
        search(without_v, chosen)

    search(forts, [])
    return best


def exact_ft(g: Graph, budget: OracleBudget = DEFAULT_BUDGET, minimal_only: bool = True) -> tuple[int, list[frozenset[int]]]:
    """Fort number and a maximum fort packing.

    Packing over inclusion-minimal forts loses nothing: any fort in a packing
    can be swapped for a minimal fort inside it without creating overlaps.
    """
    if g.n > budget.max_n_ft:
        raise BudgetExceeded(f"exact ft limited to n <= {budget.max_n_ft}, got n = {g.n}")
    forts = minimal_forts(g) if minimal_only else all_forts(g)
    packing = max_fort_packing(forts)
    witness = sorted((_bits(f) for f in packing), key=sorted)
    return len(witness), witness


def exact_pw(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, PathDecomposition]:
    return exact_pathwidth(g, max_n=budget.max_n_pw)


# ---------------------------------------------------------------------------
# Proper interval graphs
# ---------------------------------------------------------------------------

def proper_interval_fas(g: Graph, order=None) -> ArcSet:
    """One arc per clique of a minimum clique cover, lowest to highest position."""
    if order is None:
        order = proper_interval_order(g)
        if order is None:
            raise ValueError("graph is not a proper interval graph")
    return ArcSet(g, [(c[0], c[-1]) for c in minimum_clique_cover_interval(g, order)])


def z_proper_interval(g: Graph, order=None) -> int:
    """``n - cc(G)``, certified by building the matching forcing arc set."""
    a = proper_interval_fas(g, order)
    if not is_forcing_arc_set(a):  # pragma: no cover - would contradict the theorem
        raise AssertionError("clique-cover arc set is not a forcing arc set")
    return g.n - len(a)


def min_clique_cover(g: Graph) -> list[frozenset[int]]:
    """Minimum number of cliques covering every edge (brute force, small graphs)."""
    nbr = _masks(g)
    maximal: list[int] = []

    def bron_kerbosch(r: int, p: int, x: int) -> None:
        if not p and not x:
            if r & (r - 1):
                maximal.append(r)
            return
        for v in list(_bits(p)):
            bron_kerbosch(r | 1 << v, p & nbr[v], x & nbr[v])
            p &= ~(1 << v)
            x |= 1 << v

    bron_kerbosch(0, (1 << g.n) - 1, 0)
    edges = list(g.edges())
    if not edges:
        return []
    covers = [[i for i, (u, v) in enumerate(edges) if c >> u & 1 and c >> v & 1] for c in maximal]
    for size in range(1, len(maximal) + 1):
        for pick in combinations(range(len(maximal)), size):
            covered = set()
            for i in pick:
                covered.update(covers[i])
            if len(covered) == len(edges):
                return [_bits(maximal[i]) for i in pick]
    raise AssertionError("maximal cliques always cover the edges")  # pragma: no cover


# ---------------------------------------------------------------------------
# Vertex cuts and strong products
# ---------------------------------------------------------------------------

def cut_bounds(g: Graph, c: Iterable[int], v1: Iterable[int],
               budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, int]:
    """``Z(G1) + Z(G2) -/+ |C|`` with ``G1 = G[V1 + C]``, ``G2 = G[V - V1]``."""
    c, v1 = frozenset(c), frozenset(v1)
    if not c or len(c) >= g.n or not is_vertex_cut(g, c):
        raise ValueError("c is not a vertex cut")
    if v1 not in connected_components(g, removed=c):
        raise ValueError("v1 is not a component of g - c")
    g1, _ = induced_subgraph(g, v1 | c)
    g2, _ = induced_subgraph(g, set(range(g.n)) - v1)
    z1, _ = exact_z(g1, budget)
    z2, _ = exact_z(g2, budget)
    return z1 + z2 - len(c), z1 + z2 + len(c)


def strong_product_bound(g: Graph, h: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[int, ArcSet]:
    """``n_G Z(H) + n_H Z(G) - Z(G) Z(H)`` and the product arc set that attains it."""
    zg, sg = exact_z(g, budget)
    zh, sh = exact_z(h, budget)
    ag = canonical_fas(g, sg)
    ah = canonical_fas(h, sh)
    prod, index = strong_product(g, h)
    star = ArcSet(prod, [(index[u, up], index[v, vp]) for u, v in ag.arcs for up, vp in ah.arcs])
    if len(star) != len(ag) * len(ah):  # pragma: no cover
        raise AssertionError("product arc set has the wrong size")
    if not is_forcing_arc_set(star):
        raise AssertionError("product arc set is not a forcing arc set")
    return g.n * zh + h.n * zg - zg * zh, star


# ---------------------------------------------------------------------------
# Oracles for the arc-set characterisation
# ---------------------------------------------------------------------------

def naive_restricted_forcing(g: Graph, arcs: Iterable[tuple[int, int]]) -> frozenset[int]:
    """Blue set after forcing along ``arcs`` only, from their sources; quadratic sweeps."""
    arcs = list(arcs)
    heads = {v for _, v in arcs}
    blue = set(range(g.n)) - heads
    progress = True
    while progress:
        progress = False
        for u, v in arcs:
            if u in blue and v not in blue:
                if all(x in blue for x in g.adj[u] if x != v):
                    blue.add(v)
                    progress = True
    return frozenset(blue)


def _simple_cycles(g: Graph):
    """Each cycle once, starting at its smallest vertex, in both directions."""
    n = g.n
    for start in range(n):
        stack = [(start, [start])]
        while stack:
            v, path = stack.pop()
            for x in g.adj[v]:
                if x == start and len(path) >= 3:
                    yield path
                elif x > start and x not in path:
                    stack.append((x, path + [x]))


def brute_force_chain_twist(g: Graph, arcs: Iterable[tuple[int, int]]) -> list[int] | None:
    """First cycle of ``g`` satisfying the twist condition for ``arcs``, by enumerating all cycles."""
    arcs = set(arcs)
    for cyc in _simple_cycles(g):
        k = len(cyc)
        flags = [(cyc[i], cyc[(i + 1) % k]) in arcs for i in range(k)]
        if all(flags[i] or (flags[i - 1] and flags[(i + 1) % k]) for i in range(k)):
            return cyc
    return None
