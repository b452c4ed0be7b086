"""Configurations v_3, their text notation, validation and derived graphs."""
from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CompactOverflow, MalformedToken, UnknownSymbol, ValidationFailed

SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"
_SYMBOL_VALUE = {ch: i for i, ch in enumerate(SYMBOLS)}

Violation = namedtuple("Violation", ["rule", "indices"])
Violation.__str__ = lambda self: f"{self.rule}: {list(self.indices)}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple = ()

    def rules(self):
        return sorted({viol.rule for viol in self.violations})


def validate(blocks: Iterable[Sequence[int]], v: int | None = None) -> ValidationReport:
    """Check the configuration axioms on a raw block list.

    Rules reported: ``block_size`` (block index), ``point_range`` (block
    index), ``replication`` (point index), ``repeated_pair`` (the pair) and
    ``block_count`` (v, number of blocks).
    """
    blocks = [tuple(b) for b in blocks]
    found = []
    if v is None:
        pts = [p for b in blocks for p in b if isinstance(p, int)]
        v = max(pts) + 1 if pts else 0
    for i, b in enumerate(blocks):
        if len(b) != 3 or len(set(b)) != 3:
            found.append(Violation("block_size", (i,)))
        if any(not isinstance(p, int) or p < 0 or p >= v for p in b):
            found.append(Violation("point_range", (i,)))
    if len(blocks) != v:
        found.append(Violation("block_count", (v, len(blocks))))
    rep = [0] * v
    for b in blocks:
        for p in set(b):
            if isinstance(p, int) and 0 <= p < v:
                rep[p] += 1
    for p in range(v):
        if rep[p] != 3:
            found.append(Violation("replication", (p,)))
    seen = {}
    for b in blocks:
        pts = sorted(set(p for p in b if isinstance(p, int)))
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                pair = (pts[i], pts[j])
                seen[pair] = seen.get(pair, 0) + 1
    for pair in sorted(seen):
        if seen[pair] > 1:
            found.append(Violation("repeated_pair", pair))
    return ValidationReport(not found, tuple(found))


@dataclass(frozen=True)
class Configuration:
    """A symmetric configuration v_3 in normal form.

    Blocks are sorted triples and the block sequence is sorted.  Construction
    validates the axioms and raises :class:`ValidationFailed` otherwise.
    """

    v: int
    blocks: tuple
    _point_blocks: tuple = field(default=(), repr=False, compare=False, hash=False)

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(int(p) for p in b)) for b in self.blocks))
        report = validate(blocks, self.v)
        if not report.ok:
            raise ValidationFailed(report)
        object.__setattr__(self, "blocks", blocks)
        pb = [[] for _ in range(self.v)]
        for i, b in enumerate(blocks):
            for p in b:
                pb[p].append(i)
        object.__setattr__(self, "_point_blocks", tuple(tuple(x) for x in pb))

    @classmethod
    def from_blocks(cls, blocks, v=None):
        blocks = [tuple(b) for b in blocks]
        if v is None:
            v = 1 + max(p for b in blocks for p in b) if blocks else 0
        return cls(v, tuple(blocks))

    def point_blocks(self, p):
        """Indices (into ``blocks``) of the three blocks through ``p``."""
        return self._point_blocks[p]

    def relabel(self, perm):
        """Apply the point map ``p -> perm[p]``."""
        return Configuration(self.v, tuple(tuple(perm[p] for p in b) for b in self.blocks))

    def incidence_matrix(self):
        """v x v 0/1 matrix with rows indexed by blocks and columns by points."""
        rows = []
        for b in self.blocks:
            row = [0] * self.v
            for p in b:
                row[p] = 1
            rows.append(row)
        return rows

    def __str__(self):
        return format_config(self, "compact" if self.v <= 36 else "decimal")


# -- text notation -----------------------------------------------------------

def _parse_token(tok):
    if "," in tok:
        parts = tok.split(",")
        if len(parts) != 3 or not all(p.strip().isdigit() for p in parts):
            raise MalformedToken(f"bad decimal token {tok!r}")
        return tuple(int(p) for p in parts)
    if len(tok) != 3:
        raise MalformedToken(f"token {tok!r} does not have 3 symbols")
    out = []
    for ch in tok.lower():
        if ch not in _SYMBOL_VALUE:
            raise UnknownSymbol(f"symbol {ch!r} in token {tok!r}")
        out.append(_SYMBOL_VALUE[ch])
    return tuple(out)


def parse_blocks(text: str):
    """Tokenize a block list without validating it."""
    return [_parse_token(tok) for tok in text.split()]


def parse_config(text: str) -> Configuration:
    blocks = parse_blocks(text)
    if not blocks:
        raise MalformedToken("empty block list")
    v = 1 + max(p for b in blocks for p in b)
    report = validate(blocks, v)
    if not report.ok:
        raise ValidationFailed(report)
    return Configuration(v, tuple(blocks))


def format_config(x: Configuration, style: str = "compact") -> str:
    if style == "compact":
        if x.v > len(SYMBOLS):
            raise CompactOverflow(f"v={x.v} exceeds {len(SYMBOLS)} symbols")
        return " ".join("".join(SYMBOLS[p] for p in b) for b in x.blocks)
    if style == "decimal":
        return " ".join(",".join(str(p) for p in b) for b in x.blocks)
    raise ValueError(f"unknown style {style!r}")


def iter_config_texts(text: str):
    """Yield block-list strings from a multi-configuration text.

    One configuration per line; blank lines and lines starting with ``#`` are
    skipped; a trailing backslash joins a line with the next one.
    """
    pending = ""
    for raw in text.splitlines():
        line = raw.strip()
        if not pending and (not line or line.startswith("#")):
            continue
        if line.endswith("\\"):
            pending += line[:-1] + " "
            continue
        line = pending + line
        pending = ""
        if line.strip():
            yield " ".join(line.split())
    if pending.strip():
        yield " ".join(pending.split())


def read_configs(text: str):
    return [parse_config(t) for t in iter_config_texts(text)]


# -- graphs ------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted neighbour tuples."""

    n: int
    adj: tuple
    parts: tuple | None = None

    @classmethod
    def from_edges(cls, n, edges, parts=None):
        nb = [set() for _ in range(n)]
        for u, w in edges:
            if u == w:
                raise ValueError("loops are not allowed")
            nb[u].add(w)
            nb[w].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nb),
                   tuple(parts) if parts is not None else None)

    def edges(self):
        return [(u, w) for u in range(self.n) for w in self.adj[u] if u < w]

    def degree(self, u):
        return len(self.adj[u])

    def to_edge_list(self):
        """Debug text form, one ``u v`` pair per line."""
        return "\n".join(f"{u} {w}" for u, w in self.edges())

    def induced(self, vertices):
        """Induced subgraph, vertices renumbered in the given order."""
        vertices = list(vertices)
        idx = {u: i for i, u in enumerate(vertices)}
        edges = [(idx[u], idx[w]) for u in vertices for w in self.adj[u]
                 if w in idx and idx[u] < idx[w]]
        parts = [self.parts[u] for u in vertices] if self.parts is not None else None
        return Graph.from_edges(len(vertices), edges, parts)


POINT, BLOCK = 0, 1


@dataclass(frozen=True)
class LeviGraph(Graph):
    """Point-block incidence graph: points 0..v-1, blocks v..2v-1."""

    v: int = 0


@dataclass(frozen=True)
class AssociatedGraph(Graph):
    """Points adjacent iff they share a block."""


def levi_graph(x: Configuration) -> LeviGraph:
    v = x.v
    nb = [[] for _ in range(2 * v)]
    for j, b in enumerate(x.blocks):
        for p in b:
            nb[p].append(v + j)
            nb[v + j].append(p)
    g = LeviGraph(2 * v, tuple(tuple(sorted(s)) for s in nb),
                  tuple([POINT] * v + [BLOCK] * v), v)
    assert all(len(s) == 3 for s in g.adj)
    return g


def associated_graph(x: Configuration) -> AssociatedGraph:
    nb = [set() for _ in range(x.v)]
    for a, b, c in x.blocks:
        nb[a].update((b, c))
        nb[b].update((a, c))
        nb[c].update((a, b))
    g = AssociatedGraph(x.v, tuple(tuple(sorted(s)) for s in nb))
    assert all(len(s) == 6 for s in g.adj)
    return g


def config_from_levi(g: Graph, point_part=POINT) -> Configuration:
    """Decode a cubic bipartite graph (with part labels) as a configuration."""
    if g.parts is None:
        raise ValueError("graph has no part labels")
    pts = [u for u in range(g.n) if g.parts[u] == point_part]
    idx = {u: i for i, u in enumerate(pts)}
    blocks = [tuple(idx[p] for p in g.adj[u]) for u in range(g.n) if g.parts[u] != point_part]
    return Configuration(len(pts), tuple(blocks))


def dual(x: Configuration) -> Configuration:
    """Swap the roles of points and blocks (block j becomes point j)."""
    return Configuration(x.v, tuple(x.point_blocks(p) for p in range(x.v)))


def connected_components(x: Configuration):
    """Connected sub-configurations, each relabelled onto 0..k-1 by point order."""
    parent = list(range(x.v))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b, c in x.blocks:
        for y in (b, c):
            ra, ry = find(a), find(y)
            if ra != ry:
                parent[max(ra, ry)] = min(ra, ry)
    groups = {}
    for p in range(x.v):
        groups.setdefault(find(p), []).append(p)
    out = []
    for root in sorted(groups):
        pts = groups[root]
        idx = {p: i for i, p in enumerate(pts)}
        blocks = [tuple(idx[p] for p in b) for b in x.blocks if b[0] in idx]
        out.append(Configuration(len(pts), tuple(blocks)))
    return out


def is_connected(x: Configuration) -> bool:
    return len(connected_components(x)) == 1


def disjoint_union(*xs: Configuration) -> Configuration:
    blocks = []
    off = 0
    for x in xs:
        blocks.extend(tuple(p + off for p in b) for b in x.blocks)
        off += x.v
    return Configuration(off, tuple(blocks))
