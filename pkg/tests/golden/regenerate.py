"""Rebuild the golden corpus: graphs, decompositions, expected certificates.

Run from the repository root: ``python tests/golden/regenerate.py``. Only
rerun after an intentional change to the certificate format or to the
solver's output; commit the diff together with that change.
"""
from __future__ import annotations

import random
import sys
from pathlib import Path

from zfapprox import generators as gen
from zfapprox.cli import main
from zfapprox.graph import Graph, serialize_graph

HERE = Path(__file__).resolve().parent


def instances():
    """Yield ``(name, graph, bags or None)``; ``None`` means exact pathwidth."""
    rng = random.Random(1729)
    for n in (1, 2, 5, 17, 64):
        yield f"path{n}", gen.path(n), gen.path_bags(n) if n > 12 else None
    for n in (3, 4, 7, 15, 40):
        yield f"cycle{n}", gen.cycle(n), gen.cycle_bags(n) if n > 12 else None
    for r in (2, 3, 5, 10, 25):
        yield f"ladder{r}", gen.ladder(r), gen.ladder_bags(r) if 2 * r > 12 else None
    for n in (2, 3, 4, 6, 8):
        yield f"complete{n}", gen.complete(n), None
    for leaves in (1, 3, 6, 11):
        yield f"star{leaves}", gen.star(leaves), None
    for i in range(10):
        n = rng.randint(4, 60)
        g, order = gen.random_proper_interval(n, rng)
        yield f"interval{i}", g, gen.interval_bags(g, order)
    for i in range(12):
        n = rng.randint(3, 12)
        yield f"random{i}", gen.random_connected(n, rng, p=rng.choice((0.1, 0.25, 0.5))), None
    yield "empty0", Graph(0), []
    yield "isolated3", Graph(3), None
    yield "two_triangles", Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]), None
    yield "path_and_star", Graph(9, [(0, 1), (1, 2), (2, 3), (4, 5), (4, 6), (4, 7), (4, 8)]), None


def decomposition_text(bags) -> str:
    return "".join(" ".join(map(str, b)) + "\n" for b in bags)


def solve_args(name: str) -> list[str]:
    args = ["solve", "--graph", str(HERE / f"{name}.g")]
    dec = HERE / f"{name}.d"
    return args + (["--decomposition", str(dec)] if dec.exists() else ["--exact-pw"])


def main_() -> int:
    names = []
    for name, g, bags in instances():
        (HERE / f"{name}.g").write_bytes(serialize_graph(g))
        dec = HERE / f"{name}.d"
        if bags is not None:
            dec.write_text(decomposition_text(bags))
        elif dec.exists():
            dec.unlink()
        code = main(solve_args(name) + ["--out", str(HERE / f"{name}.cert.json")])
        if code:
            print(f"{name}: solve exited {code}", file=sys.stderr)
            return code
        names.append(name)
    (HERE / "MANIFEST").write_text("".join(n + "\n" for n in names))
    print(f"{len(names)} instances written")
    return 0


if __name__ == "__main__":
    sys.exit(main_())
