"""Strong and weak colourings of configurations."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .blocking import find_blocking_set
from .core import Configuration, Graph, associated_graph
from .errors import BoundExceeded, NotAStrong3Colouring

NEAR4_BOUND = 20


@dataclass(frozen=True)
class Colouring:
    """Point colours; ``None`` marks an uncoloured point."""

    colours: tuple

    @property
    def num_colours(self):
        return len({c for c in self.colours if c is not None})

    def classes(self):
        out = {}
        for p, c in enumerate(self.colours):
            if c is not None:
                out.setdefault(c, []).append(p)
        return [tuple(out[c]) for c in sorted(out)]

    def to_pairs(self):
        return [f"{p}:{c}" for p, c in enumerate(self.colours) if c is not None]


@dataclass(frozen=True)
class ColouringReport:
    chi_w: int
    chi_s: int
    strong_witness: Colouring
    weak_witness: Colouring


def verify_strong_colouring(x: Configuration, c: Colouring) -> bool:
    cols = c.colours
    return all(None not in (cols[a], cols[b], cols[d]) and len({cols[a], cols[b], cols[d]}) == 3
               for a, b, d in x.blocks)


def verify_weak_colouring(x: Configuration, c: Colouring) -> bool:
    cols = c.colours
    return all(None not in (cols[a], cols[b], cols[d]) and len({cols[a], cols[b], cols[d]}) > 1
               for a, b, d in x.blocks)


def colour_graph(g: Graph, k: int, skip=()):
    """A proper k-colouring of ``g`` minus ``skip`` (list, -1 for skipped) or None.

    DSATUR order with the usual symmetry breaking: a vertex may only open the
    next unused colour.
    """
    n = g.n
    skipped = set(skip)
    col = [-1] * n
    active = [u for u in range(n) if u not in skipped]
    # forbidden-colour counters per vertex
    forb = [[0] * k for _ in range(n)]

    def place(u, c, delta):
        for w in g.adj[u]:
            forb[w][c] += delta

    def pick():
        best, key = -1, None
        for u in active:
            if col[u] >= 0:
                continue
            sat = sum(1 for c in range(k) if forb[u][c])
            kk = (sat, sum(1 for w in g.adj[u] if col[w] < 0 and w not in skipped), -u)
            if key is None or kk > key:
                best, key = u, kk
        return best

    def rec(used):
        u = pick()
        if u < 0:
            return True
        for c in range(min(used + 1, k)):
            if forb[u][c]:
                continue
            col[u] = c
            place(u, c, 1)
            if rec(max(used, c + 1)):
                return True
            place(u, c, -1)
            col[u] = -1
        return False

    return col if rec(0) else None


def strong_chromatic_number(x: Configuration):
    """Exact chromatic number of the associated graph with a witness."""
    g = associated_graph(x)
    k = 3  # every block is a triangle
    while True:
        col = colour_graph(g, k)
        if col is not None:
            c = Colouring(tuple(col))
            assert verify_strong_colouring(x, c)
            return k, c
        k += 1


def weak_colouring(x: Configuration, k: int):
    """A colouring with ``k`` colours and no monochromatic block, or None."""
    if k == 2:
        s = find_blocking_set(x)
        if s is None:
            return None
        inside = set(s)
        return Colouring(tuple(0 if p in inside else 1 for p in range(x.v)))
    col = [-1] * x.v

    def ok(p):
        for bi in x.point_blocks(p):
            a, b, d = x.blocks[bi]
            if col[a] == col[b] == col[d]:
                return False
        return True

    def rec(p, used):
        if p == x.v:
            return True
        for c in range(min(used + 1, k)):
            col[p] = c
            if ok(p) and rec(p + 1, max(used, c + 1)):
                return True
        col[p] = -1
        return False

    return Colouring(tuple(col)) if rec(0, 0) else None


def colouring_report(x: Configuration) -> ColouringReport:
    chi_s, strong = strong_chromatic_number(x)
    weak = weak_colouring(x, 2)
    chi_w = 2
    if weak is None:
        weak = weak_colouring(x, 3)
        chi_w = 3
    assert verify_weak_colouring(x, weak)
    return ColouringReport(chi_w, chi_s, strong, weak)


def deleted_class_graphs(x: Configuration, c: Colouring):
    """Delete each colour class of a strong 3-colouring from the associated graph.

    Returns three graphs, in colour order; the part labels record which of the
    two remaining classes a vertex came from.
    """
    if c.num_colours != 3 or None in c.colours or not verify_strong_colouring(x, c):
        raise NotAStrong3Colouring("need a strong colouring with exactly 3 colours")
    g = associated_graph(x)
    classes = c.classes()
    out = []
    for k in range(3):
        keep = [p for p in range(x.v) if c.colours[p] != sorted(set(c.colours))[k]]
        h = g.induced(keep)
        others = [col for col in sorted(set(c.colours)) if col != sorted(set(c.colours))[k]]
        h = Graph(h.n, h.adj, tuple(others.index(c.colours[p]) for p in keep))
        assert all(len(a) == 3 for a in h.adj)
        assert all(h.parts[u] != h.parts[w] for u, w in h.edges())
        out.append(h)
    assert len(classes) == 3
    return out


def near_4_colouring(x: Configuration, max_uncoloured: int = 2, bound: int = NEAR4_BOUND):
    """Strong 4-colouring of all but at most ``max_uncoloured`` points.

    Returns ``(Colouring, uncoloured_points)`` with the fewest uncoloured
    points, or None.
    """
    if x.v > bound:
        raise BoundExceeded(f"v={x.v} exceeds bound {bound}")
    g = associated_graph(x)
    for size in range(max_uncoloured + 1):
        for skip in combinations(range(x.v), size):
            col = colour_graph(g, 4, skip)
            if col is not None:
                return Colouring(tuple(None if c < 0 else c for c in col)), tuple(skip)
    return None
