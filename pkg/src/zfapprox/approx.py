"""Zero forcing set and fort packing from a nice path decomposition.

:func:`approximate_zero_forcing` sweeps the bags left to right. With ``t``
the current cut bag it looks for the first ``z`` such that
``X_t ∪ X_z`` no longer forces ``G[X_t ∪ ... ∪ X_z]``; the white residue is
a fort, and the forcing arc set built so far is reversed and glued to the
canonical arc set of ``X_t ∪ X_{z-1}`` on that window. Each round adds at
most ``w + 1`` vertices to the zero forcing set and one fort to the
packing, so ``|S| <= (w + 1) |F|``.
"""
from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .arcs import ArcSet, find_chain_twist, is_forcing_arc_set, satisfies_p1, sources
from .decomposition import NicePathDecomposition, PathDecomposition, make_nice
from .forcing import closure, white_set
from .graph import Graph, connected_components, induced_subgraph, is_connected


class InvariantError(AssertionError):
    """A loop invariant of the sweep failed (only raised with ``check=True``)."""


@dataclass(frozen=True)
class FortPacking:
    forts: tuple[frozenset[int], ...] = ()

    def __len__(self) -> int:
        return len(self.forts)


@dataclass(frozen=True)
class ApproxResult:
    n: int
    s: frozenset[int]
    packing: FortPacking
    fas: ArcSet
    width_used: int
    iterations: tuple[tuple[int, int], ...] = field(default=())


class _ArcStore:
    """The accumulated arc set, with O(1) reversal of everything stored so far.

    Arcs are kept in a stored frame; when ``flipped`` the actual arc set is
    the reverse of the stored one. Source and sink sets are maintained
    incrementally over the vertices added so far.
    """

    def __init__(self, n: int):
        self.nxt = [-1] * n
        self.prv = [-1] * n
        self.flipped = False
        self.src: set[int] = set()
        self.snk: set[int] = set()

    def add_vertex(self, v: int) -> None:
        self.src.add(v)
        self.snk.add(v)

    def add(self, u: int, v: int) -> None:
        if self.flipped:
            u, v = v, u
        if self.nxt[u] != -1 or self.prv[v] != -1:
            raise InvariantError(f"merging arc ({u}, {v}) breaks the dipath structure")
        self.nxt[u] = v
        self.prv[v] = u
        self.src.discard(v)
        self.snk.discard(u)

    def drop_arc_into(self, v: int) -> None:
        if not self.flipped:
            u = self.prv[v]
            if u != -1:
                self.prv[v] = self.nxt[u] = -1
                self.src.add(v)
                self.snk.add(u)
        else:
            u = self.nxt[v]
            if u != -1:
                self.nxt[v] = self.prv[u] = -1
                self.snk.add(v)
                self.src.add(u)

    def reverse(self) -> None:
        self.flipped = not self.flipped

    def sources(self) -> set[int]:
        return self.snk if self.flipped else self.src

    def arcs(self) -> list[tuple[int, int]]:
        out = [(u, v) for u, v in enumerate(self.nxt) if v != -1]
        if self.flipped:
            out = [(v, u) for u, v in out]
        return out


def _window_white(g: Graph, npd: NicePathDecomposition, t: int, z: int,
                  seeds: set[int], target: int) -> frozenset[int]:
    """White residue of ``seeds`` in ``G(t, z)``, stopping once ``target`` is blue.

    The caller knows that ``seeds | {target}`` forces the window, so reaching
    ``target`` means nothing stays white. Window membership is read off the
    first/last bag of each vertex; nothing is materialised.
    """
    first, last, adj = npd.first, npd.last, g.adj
    blue = set(seeds)
    cnt: dict[int, int] = {}
    queue: deque[int] = deque()
    near = [u for u in adj[target] if u in blue]
    for u in near + sorted(blue.difference(near)):
        c = 0
        for x in adj[u]:
            if x not in blue and first[x] <= z and last[x] >= t:
                c += 1
        cnt[u] = c
        if c == 1:
            queue.append(u)
    while queue:
        u = queue.popleft()
        if cnt[u] != 1:
            continue
        v = next(x for x in adj[u] if x not in blue and first[x] <= z and last[x] >= t)
        blue.add(v)
        if v == target:
            return frozenset()
        c = 0
        for x in adj[v]:
            if first[x] > z or last[x] < t:
                continue
            if x in blue:
                cnt[x] -= 1
                if cnt[x] == 1:
                    queue.append(x)
            else:
                c += 1
        cnt[v] = c
        if c == 1:
            queue.append(v)
    return npd.prefix_union(t, z) - blue


def _naive_white(g: Graph, window, seeds) -> frozenset[int]:
    sub, idx = induced_subgraph(g, window)
    back = sorted(idx, key=idx.get)
    return frozenset(back[v] for v in white_set(sub, [idx[v] for v in seeds]))


def _window_forces(g: Graph, window, seeds) -> list[tuple[int, int]]:
    """Canonical forces of ``seeds`` in ``G[window]``, without relabelling.

    Relabelling preserves vertex order, so the lowest-forcer rule picks the
    same forces as :func:`canonical_forces` on the induced subgraph.
    """
    adj = g.adj
    blue = set(seeds)
    white_nbrs: dict[int, int] = {}
    heap: list[int] = []
    for u in blue:
        c = 0
        for x in adj[u]:
            if x in window and x not in blue:
                c += 1
        white_nbrs[u] = c
        if c == 1:
            heap.append(u)
    heapq.heapify(heap)
    forces = []
    while heap:
        u = heapq.heappop(heap)
        if white_nbrs[u] != 1:
            continue
        for v in adj[u]:
            if v in window and v not in blue:
                break
        blue.add(v)
        forces.append((u, v))
        c = 0
        for x in adj[v]:
            if x not in window:
                continue
            if x in blue:
                white_nbrs[x] -= 1
                if white_nbrs[x] == 1:
                    heapq.heappush(heap, x)
            else:
                c += 1
        white_nbrs[v] = c
        if c == 1:
            heapq.heappush(heap, v)
    if len(blue) != len(window):
        raise InvariantError(f"{len(window) - len(blue)} window vertices stay white")
    return forces


def approximate_zero_forcing(g: Graph, npd: NicePathDecomposition, check: bool = False) -> ApproxResult:
    """Run the sweep on a connected graph.

    With ``check=True`` every residue is recomputed from scratch on the
    materialised window and every loop invariant of the correctness argument
    is asserted after each round (raises :class:`InvariantError`).
    """
    if not isinstance(npd, NicePathDecomposition):
        raise ValueError("a nice path decomposition is required")
    if npd.graph is not g and npd.graph != g:
        raise ValueError("decomposition belongs to a different graph")
    if not is_connected(g):
        raise ValueError("graph must be connected; split it into components first")
    n = g.n
    if n == 0:
        return ApproxResult(0, frozenset(), FortPacking(), ArcSet(g), 0, ())

    k = npd.k
    w = npd.width()
    bags = ((),) + npd.bags + ((),)
    store = _ArcStore(n)
    forts: list[frozenset[int]] = []
    trace: list[tuple[int, int]] = []
    t = 0
    while True:
        xt = set(bags[t])
        z = t
        residue: frozenset[int] = frozenset()
        while not residue and z <= k:
            z += 1
            if check:
                residue = _residue_step(g, npd, t, z, xt, check)
                continue
            # inlined fast path of _residue_step; this loop runs once per bag
            prev, cur = bags[z - 1], bags[z]
            if z == t + 1 or len(prev) < len(cur):
                continue
            for gone in prev:
                if gone not in cur:
                    break
            if gone not in xt:
                residue = _window_white(g, npd, t, z, xt.union(cur), gone)
        trace.append((t, z))
        store.reverse()
        s_after_reverse = set(store.sources()) if check else None

        if residue:
            xz_prev, xz = npd.bag(z - 1), npd.bag(z)
            if check and not set(xz) < set(xz_prev):
                raise InvariantError(f"round {len(trace)}: X_{z} is not a proper subset of X_{z - 1}")
            forts.append(residue)
            window = npd.prefix_union(t, z)
            for v in window - xt:
                store.add_vertex(v)
            for u, v in _window_forces(g, window, xt | set(xz_prev)):
                store.add(u, v)
            for v in xz:
                store.drop_arc_into(v)
            if check:
                _check_round(g, npd, store, forts, trace, t, z, w,
                             expected_s=s_after_reverse | set(xz_prev))
            t = z
            continue

        window = npd.prefix_union(t, k + 1)
        for v in window - xt:
            store.add_vertex(v)
        for u, v in _window_forces(g, window, xt):
            store.add(u, v)
        if check and set(store.sources()) != s_after_reverse:
            raise InvariantError("final merge changed the source set")
        break

    result = ApproxResult(
        n=n,
        s=frozenset(store.sources()),
        packing=FortPacking(tuple(forts)),
        fas=ArcSet(g, store.arcs()),
        width_used=w,
        iterations=tuple(trace),
    )
    if check:
        if not is_forcing_arc_set(result.fas) or sources(result.fas) != result.s:
            raise InvariantError("final arc set is not a forcing arc set with sources S")
        if len(result.fas) != n - len(result.s):
            raise InvariantError("|A| != n - |S|")
    return result


def _residue_step(g: Graph, npd: NicePathDecomposition, t: int, z: int,
                  xt: set[int], check: bool) -> frozenset[int]:
    """``White(X_t ∪ X_z, G(t, z))`` given that the previous ``z`` left nothing white."""
    prev, cur = npd.bag(z - 1), npd.bag(z)
    if z == t + 1 or len(prev) < len(cur):
        # window is the seed itself, or one new blue vertex joins a forced window
        residue = frozenset()
    else:
        # nice: exactly one vertex of X_(z-1) was forgotten
        gone = next(v for v in prev if v not in cur)
        if gone in xt:
            residue = frozenset()
        else:
            residue = _window_white(g, npd, t, z, xt.union(cur), gone)
    if check:
        naive = _naive_white(g, npd.prefix_union(t, z), xt.union(cur))
        if naive != residue:
            raise InvariantError(f"residue mismatch at t={t}, z={z}: {sorted(residue)} vs {sorted(naive)}")
    return residue


def _check_round(g, npd, store, forts, trace, t, z, w, expected_s) -> None:
    j = len(trace)
    domain = npd.prefix_union(0, z)
    sub, idx = induced_subgraph(g, domain)
    local = ArcSet(sub, [(idx[u], idx[v]) for u, v in store.arcs()])
    if not is_forcing_arc_set(local):
        raise InvariantError(f"round {j}: arc set is not a forcing arc set of G(0, {z})")
    back = sorted(idx, key=idx.get)
    srcs = {back[v] for v in sources(local)}
    if srcs != store.sources():
        raise InvariantError(f"round {j}: tracked sources disagree with the arc set")
    if srcs != expected_s:
        raise InvariantError(f"round {j}: S_j differs from Sinks(A_(j-1)) + X_(z-1)")
    if not set(npd.bag(z)) <= srcs:
        raise InvariantError(f"round {j}: some vertex of X_{z} is not a source")
    if len(srcs) > (w + 1) * j:
        raise InvariantError(f"round {j}: |S_j| = {len(srcs)} > (w+1)j = {(w + 1) * j}")
    residue = forts[-1]
    if not residue <= npd.prefix_union(t, z) - set(npd.bag(t)) - set(npd.bag(z)):
        raise InvariantError(f"round {j}: fort leaves the window interior")
    for other in forts[:-1]:
        if other & residue:
            raise InvariantError(f"round {j}: fort overlaps an earlier fort")


# ---------------------------------------------------------------------------
# Disconnected graphs
# ---------------------------------------------------------------------------

def restrict_decomposition(pd: PathDecomposition, vertices, sub: Graph, index: dict[int, int]) -> PathDecomposition:
    bags = []
    for bag in pd.bags:
        kept = [index[v] for v in bag if v in index]
        if kept:
            bags.append(kept)
    return PathDecomposition(sub, bags)


@dataclass(frozen=True)
class ComponentRun:
    vertices: tuple[int, ...]
    result: ApproxResult


def solve_components(g: Graph, pd: PathDecomposition, check: bool = False) -> tuple[ApproxResult, list[ComponentRun]]:
    """Run the sweep per connected component and take the union of the results."""
    comps = connected_components(g)
    if len(comps) == 1:
        # nothing to split; skip the relabelling round trip
        local = approximate_zero_forcing(g, make_nice(pd), check=check)
        return local, [ComponentRun(tuple(range(g.n)), local)]
    runs = []
    s: set[int] = set()
    forts: list[frozenset[int]] = []
    arcs: list[tuple[int, int]] = []
    width_used = 0
    for comp in comps:
        sub, idx = induced_subgraph(g, comp)
        back = sorted(idx, key=idx.get)
        npd = make_nice(restrict_decomposition(pd, comp, sub, idx))
        local = approximate_zero_forcing(sub, npd, check=check)
        runs.append(ComponentRun(tuple(back), local))
        s.update(back[v] for v in local.s)
        forts.extend(frozenset(back[v] for v in f) for f in local.packing.forts)
        arcs.extend((back[u], back[v]) for u, v in local.fas.arcs)
        width_used = max(width_used, local.width_used)
    forts.sort(key=lambda f: sorted(f))
    combined = ApproxResult(
        n=g.n,
        s=frozenset(s),
        packing=FortPacking(tuple(forts)),
        fas=ArcSet(g, arcs),
        width_used=width_used,
        iterations=tuple(p for run in runs for p in run.result.iterations),
    )
    return combined, runs


# ---------------------------------------------------------------------------
# Independent verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    claims: tuple[Claim, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims)

    def lines(self) -> list[str]:
        out = []
        for c in self.claims:
            status = "PASS" if c.passed else "FAIL"
            out.append(f"{c.name}: {status}" + (f" ({c.detail})" if c.detail else ""))
        return out


def _fort_violation(g: Graph, fort: frozenset[int]) -> str | None:
    if not fort:
        return "empty fort"
    bad = [v for v in fort if not 0 <= v < g.n]
    if bad:
        return f"vertex {bad[0]} outside the graph"
    seen = set()
    for v in fort:
        for x in g.adj[v]:
            if x in fort or x in seen:
                continue
            seen.add(x)
            if sum(1 for y in g.adj[x] if y in fort) == 1:
                return f"vertex {x} has exactly one neighbour in the fort"
    return None


def verify_result(g: Graph, r: ApproxResult) -> VerificationReport:
    """Re-check a result using only the forcing and arc-set primitives."""
    claims = []

    s_ok_range = all(0 <= v < g.n for v in r.s)
    if not s_ok_range:
        claims.append(Claim("zero-forcing-set", False, "S contains vertices outside the graph"))
    else:
        residue = closure(g, r.s).white
        claims.append(Claim("zero-forcing-set", not residue,
                            f"white after forcing: {sorted(residue)}" if residue else ""))

    problems = []
    for i, fort in enumerate(r.packing.forts):
        why = _fort_violation(g, fort)
        if why:
            problems.append(f"fort {i}: {why}")
    claims.append(Claim("forts-valid", not problems, "; ".join(problems)))

    owner: dict[int, int] = {}
    clash = ""
    for i, fort in enumerate(r.packing.forts):
        for v in sorted(fort):
            if v in owner:
                clash = f"vertex {v} in forts {owner[v]} and {i}"
                break
            owner[v] = i
        if clash:
            break
    claims.append(Claim("forts-disjoint", not clash, clash))

    bound = (r.width_used + 1) * len(r.packing)
    claims.append(Claim("size-bound", len(r.s) <= bound,
                        f"|S| = {len(r.s)}, (w+1)|F| = {bound}"))

    claims.append(_check_fas(g, r))
    return VerificationReport(tuple(claims))


def _check_fas(g: Graph, r: ApproxResult) -> Claim:
    name = "forcing-arc-set"
    try:
        a = r.fas if r.fas.graph == g else ArcSet(g, r.fas.arcs)
    except ValueError as exc:
        return Claim(name, False, str(exc))
    if not satisfies_p1(a):
        return Claim(name, False, "arcs are not vertex-disjoint dipaths")
    twist = find_chain_twist(a)
    if twist is not None:
        return Claim(name, False, f"chain twist on cycle {list(twist.cycle)}")
    if sources(a) != r.s:
        return Claim(name, False, "sources of the arc set differ from S")
    return Claim(name, True)


class RatioCertificate(NamedTuple):
    lower: int
    upper: int
    ratio: float


def ratio_certificate(r: ApproxResult) -> RatioCertificate:
    """Certified bracket ``lower <= Z(G) <= upper`` from a verified result."""
    upper = len(r.s)
    lower = len(r.packing)
    if lower == 0:
        if upper == 0:
            return RatioCertificate(0, 0, 1.0)
        # any nonempty graph needs at least one blue vertex
        return RatioCertificate(1, upper, math.inf)
    return RatioCertificate(lower, upper, upper / lower)
