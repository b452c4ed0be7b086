"""Explicit constructions of configurations with prescribed properties."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .colouring import Colouring
from .core import Configuration, Graph, associated_graph, connected_components, parse_config
from .errors import (BadBase, EvenCount, InvalidBase, InvalidChoice, OutOfRange,
                     PreconditionViolated, ValidationFailed)
from .graphs import _bipartition, three_k2_decomposition

# fixed small systems used as building blocks
FANO = "013 026 045 124 156 235 346"
CONFIG_8 = "012 034 056 135 147 246 257 367"
CONFIG_9_MIN4 = "012 034 056 135 147 248 267 368 578"
CONFIG_10_MIN5 = "012 034 056 135 178 247 268 379 469 589"
# the same 10-point system with block {1,3,5} moved to {0,1,2}
CONFIG_10_SWAP = "012 034 078 135 179 236 289 457 468 569"
CONFIG_11_MIN5 = "012 034 056 135 146 278 29a 379 47a 589 68a"
CHIS5_12 = "012 034 056 135 146 237 289 48a 59b 6ab 78b 79a"
CHIS5_16 = "012 034 056 135 146 236 278 479 57a 89b 8cd 9ef ace adf bcf bde"
# min blocking size 7 on 15 points; invariant under a fixed-point-free Z_3
NEARMIN2_15 = "013 025 067 124 178 268 379 3cd 48a 4de 56b 5ce 9ad 9bc abe"
# strongly 4-chromatic witnesses for v = 9, 10, 11
CHIS4_SMALL = {
    9: "012 034 056 135 147 238 267 468 578",
    10: "012 034 056 137 148 239 258 469 579 678",
    11: "012 034 056 137 145 238 269 49a 58a 67a 789",
}


def fano() -> Configuration:
    return parse_config(FANO)


def cyclic_config(v: int, base=(0, 1, 3)) -> Configuration:
    """The configuration generated by ``base`` under ``i -> i + 1 (mod v)``."""
    blocks = [tuple((b + i) % v for b in base) for i in range(v)]
    if len({tuple(sorted(b)) for b in blocks}) != v:
        raise InvalidBase(f"translates of {base} are not distinct mod {v}")
    try:
        return Configuration(v, tuple(blocks))
    except ValidationFailed as exc:
        raise InvalidBase(f"base {base} does not generate a configuration mod {v}") from exc


def _replace(x: Configuration, old, new, v=None) -> Configuration:
    blocks = list(x.blocks)
    for b in old:
        b = tuple(sorted(b))
        if b not in blocks:
            raise PreconditionViolated(f"block {b} not present")
        blocks.remove(b)
    blocks.extend(tuple(b) for b in new)
    return Configuration(x.v if v is None else v, tuple(blocks))


def martinetti_extend(x: Configuration, b1, b2, a1: int, bb1: int) -> Configuration:
    """Replace disjoint blocks ``b1``, ``b2`` by three blocks through a new point.

    The new point ``c = x.v`` gives blocks ``b1 - a1 + c``, ``b2 - bb1 + c`` and
    ``{c, a1, bb1}``.
    """
    b1, b2 = tuple(sorted(b1)), tuple(sorted(b2))
    if b1 not in x.blocks or b2 not in x.blocks:
        raise PreconditionViolated("both blocks must belong to the configuration")
    if set(b1) & set(b2):
        raise PreconditionViolated("blocks must be disjoint")
    if a1 not in b1 or bb1 not in b2:
        raise PreconditionViolated("a1 must lie in b1 and bb1 in b2")
    if any(a1 in b and bb1 in b for b in x.blocks):
        raise PreconditionViolated("a1 and bb1 lie in a common block")
    c = x.v
    new = [tuple(p for p in b1 if p != a1) + (c,),
           tuple(p for p in b2 if p != bb1) + (c,),
           (c, a1, bb1)]
    return _replace(x, [b1, b2], new, x.v + 1)


def martinetti_cyclic_odd(v: int) -> Configuration:
    """Odd ``v``: extend C_{v-1} by replacing {0,1,3} and {4,5,7}; the odd
    points of C_{v-1} still form a blocking set."""
    if v % 2 == 0 or v < 11:
        raise OutOfRange("need odd v >= 11")
    return martinetti_extend(cyclic_config(v - 1), (0, 1, 3), (4, 5, 7), 0, 5)


# -- the triangle family and its extensions ------------------------------------

def _tri_labels(s):
    return (lambda i: i % s), (lambda i: s + i % s), (lambda i: 2 * s + i % s)


def triangle_family(s: int) -> Configuration:
    """Points a_i = i, b_i = s + i, c_i = 2s + i; blocks {a_i,b_i,c_{i+1}},
    {a_i,b_{i+1},c_i}, {a_{i+1},b_i,c_i}."""
    if s < 3:
        raise OutOfRange("s must be at least 3")
    a, b, c = _tri_labels(s)
    blocks = []
    for i in range(s):
        blocks += [(a(i), b(i), c(i + 1)), (a(i), b(i + 1), c(i)), (a(i + 1), b(i), c(i))]
    return Configuration(3 * s, tuple(blocks))


def _extend_inf0_min(x, s):
    a, b, c = _tri_labels(s)
    inf0 = x.v
    return _replace(x, [(a(0), b(0), c(1)), (a(1), b(1), c(2))],
                    [(inf0, b(0), b(1)), (inf0, a(0), c(1)), (inf0, a(1), c(2))], x.v + 1)


def _extend_inf1_min(x, s):
    a, b, c = _tri_labels(s)
    inf1 = x.v
    return _replace(x, [(a(0), b(1), c(0)), (a(1), b(2), c(1))],
                    [(inf1, b(1), b(2)), (inf1, a(0), c(0)), (inf1, a(1), c(1))], x.v + 1)


def minblocking_family(v: int) -> Configuration:
    """A configuration whose minimal blocking set has size ceil(v/3)."""
    if v < 9:
        raise OutOfRange("v must be at least 9")
    s = v // 3
    x = triangle_family(s)
    if v % 3 >= 1:
        x = _extend_inf0_min(x, s)
    if v % 3 == 2:
        x = _extend_inf1_min(x, s)
    return x


def minblocking_witness(v: int):
    """The blocking set {a_i} (plus b_1 when v is not a multiple of 3)."""
    s = v // 3
    q = list(range(s))
    if v % 3:
        q.append(s + 1)
    return tuple(q)


def _merge_with_triangle(parts, s):
    """Disjoint union of ``parts`` (each containing block {0,1,2}) and
    triangle_family(s), followed by the point swaps of the near-minimal
    construction.  Returns the configuration and the offsets of each part."""
    offsets = []
    blocks = []
    off = 0
    for x in parts:
        offsets.append(off)
        blocks += [tuple(p + off for p in b) for b in x.blocks]
        off += x.v
    t = triangle_family(s)
    a = lambda i: off + i % s  # noqa: E731
    b = lambda i: off + s + i % s  # noqa: E731
    c = lambda i: off + 2 * s + i % s  # noqa: E731
    blocks += [tuple(p + off for p in blk) for blk in t.blocks]
    v = off + 3 * s

    def swap(old, new):
        old = tuple(sorted(old))
        blocks.remove(old)
        blocks.append(tuple(new))

    o0 = offsets[0]
    swap((o0, o0 + 1, o0 + 2), (a(0), o0 + 1, o0 + 2))
    swap((a(0), b(0), c(1)), (o0, b(0), c(1)))
    if len(parts) == 2:
        o1 = offsets[1]
        swap((o1, o1 + 1, o1 + 2), (b(0), o1 + 1, o1 + 2))
        swap((a(1), b(0), c(0)), (a(1), o1, c(0)))
    return Configuration(v, tuple(blocks)), offsets, (a, b, c)


def _point_swap_join(x: Configuration, y: Configuration, bx, by, p: int, q: int) -> Configuration:
    """Disjoint union of ``x`` and ``y`` (shifted by ``x.v``) in which point
    ``p`` of block ``bx`` and point ``q`` of block ``by`` trade places."""
    n = x.v
    by = tuple(sorted(b + n for b in by))
    q += n
    blocks = [b for b in x.blocks if b != tuple(sorted(bx))]
    blocks += [t for t in (tuple(r + n for r in b) for b in y.blocks) if t != by]
    blocks.append(tuple(r for r in bx if r != p) + (q,))
    blocks.append(tuple(r for r in by if r != q) + (p,))
    return Configuration(n + y.v, tuple(blocks))


def nearmin_family(v: int, offset: int) -> Configuration:
    """A configuration whose minimal blocking set has size ceil(v/3) + offset.

    Large v come from gluing one or two small systems onto the triangle
    family.  The 10-point system is used in a relabelling whose swapped block
    keeps the minimum (the literal labelling loses one), and for offset 2
    the pairs 10+8, 8+11 and 10+10 replace 8+8, 8+9 and 9+9, which only reach
    ceil(v/3) + 1.
    """
    if offset == 1:
        small = {
            8: lambda: parse_config(CONFIG_8),
            9: lambda: parse_config(CONFIG_9_MIN4),
            10: lambda: parse_config(CONFIG_10_MIN5),
            12: lambda: cyclic_config(12, (0, 1, 4)),
        }
        if v < 8:
            raise OutOfRange("offset 1 needs v >= 8")
        if v in small:
            return small[v]()
        if v <= 16:
            return cyclic_config(v)
        base = {2: CONFIG_8, 0: CONFIG_9_MIN4, 1: CONFIG_10_SWAP}[v % 3]
        x = parse_config(base)
        return _merge_with_triangle([x], (v - x.v) // 3)[0]
    if offset == 2:
        if v == 15:
            return parse_config(NEARMIN2_15)
        if v in (12, 17, 18, 21, 22, 23, 24, 26):
            return cyclic_config(v)
        if v in (16, 19, 20):
            from .corpus import corpus_get
            return corpus_get({16: "min8-16-1", 19: "min9-19-1", 20: "min9-20"}[v]).config
        if v < 25:
            raise OutOfRange(f"no configuration {v}_3 with minimal blocking size ceil(v/3)+2")
        if v == 25:
            return _point_swap_join(parse_config(CONFIG_8), nearmin_family(17, 1), (0, 1, 2), (9, 11, 14), 0, 14)
        first, second = {0: (CONFIG_10_SWAP, CONFIG_8), 1: (CONFIG_8, CONFIG_11_MIN5),
                         2: (CONFIG_10_SWAP, CONFIG_10_SWAP)}[v % 3]
        first, second = parse_config(first), parse_config(second)
        s = (v - first.v - second.v) // 3
        return _merge_with_triangle([first, second], s)[0]
    raise OutOfRange("offset must be 1 or 2")


# blocking points of the glued small systems, paired with the triangle
# classes completing the witness: "a" = all a_i, "a+b0" adds b_0, "b" = all b_i
_NEARMIN_WITNESS = {
    (1, 2): ((1, 4, 5, 6), "b"),
    (1, 0): ((1, 4, 5, 6), "b"),
    (1, 1): ((0, 3, 6, 7, 9), "a"),
    (2, 0): ((3, 4, 7, 9, 13, 14, 15), "a+b0"),
    (2, 1): ((0, 1, 2, 3, 8, 9, 11, 16, 18), "b"),
    (2, 2): ((3, 4, 7, 9, 13, 15, 18, 19), "a+b0"),
}


def nearmin_witness(v: int, offset: int):
    """A blocking set of size ceil(v/3) + offset for the glued constructions
    (v >= 17 for offset 1, v >= 25 for offset 2)."""
    if offset == 2 and v == 25:
        return (0, 1, 2, 3, 8, 10, 11, 15, 16, 17, 18)
    if (offset == 1 and v >= 17) or (offset == 2 and v >= 27):
        if offset == 1:
            base_v = {2: 8, 0: 9, 1: 10}[v % 3]
        else:
            base_v = {0: 18, 1: 19, 2: 20}[v % 3]
        s = (v - base_v) // 3
        q, tri = _NEARMIN_WITNESS[offset, v % 3]
        if tri == "b":
            return tuple(q) + tuple(base_v + s + i for i in range(s))
        extra = (base_v + s,) if tri == "a+b0" else ()
        return tuple(q) + tuple(base_v + i for i in range(s)) + extra
    raise OutOfRange("no explicit witness for these parameters")


# -- stitching -------------------------------------------------------------------

@dataclass(frozen=True)
class StitchChoice:
    """``block`` is an ordered triple of points of the first configuration and
    ``point`` a point of the second one."""

    block: tuple
    point: int


def stitch2(x: Configuration, y: Configuration, choice: StitchChoice | None = None) -> Configuration:
    """Glue ``x`` and ``y`` into a configuration on v + v' - 1 points.

    The block B = (x1, x2, x3) of ``x`` is removed, as is the point x' of
    ``y``; the i-th block through x' (in normal order) gets x_i in place of
    x'.  Points of ``y`` other than x' are numbered from ``x.v`` upwards.
    """
    if choice is None:
        choice = StitchChoice(x.blocks[0], 0)
    blk = tuple(choice.block)
    if tuple(sorted(blk)) not in x.blocks or len(set(blk)) != 3:
        raise InvalidChoice(f"{blk} is not a block of the first configuration")
    if not 0 <= choice.point < y.v:
        raise InvalidChoice(f"{choice.point} is not a point of the second configuration")
    xp = choice.point
    relabel = {}
    nxt = x.v
    for p in range(y.v):
        if p != xp:
            relabel[p] = nxt
            nxt += 1
    blocks = [b for b in x.blocks if b != tuple(sorted(blk))]
    through = [y.blocks[i] for i in y.point_blocks(xp)]
    for b in y.blocks:
        if b not in through:
            blocks.append(tuple(relabel[p] for p in b))
    for i, b in enumerate(through):
        blocks.append(tuple(relabel[p] for p in b if p != xp) + (blk[i],))
    return Configuration(x.v + y.v - 1, tuple(blocks))


def stitch3(xs, choices=None) -> Configuration:
    """Cyclically link an odd number of configurations.

    ``choices[i] = (B^i, x^i)`` with x^i in B^i; B^i is replaced by
    ``B^i - x^i + x^{i+1}``.  Points of constituent i are offset by the
    sizes of the earlier constituents.
    """
    xs = list(xs)
    k = len(xs)
    if k % 2 == 0:
        raise EvenCount("stitch3 needs an odd number of configurations")
    if k < 3:
        raise PreconditionViolated("stitch3 needs at least three configurations")
    if choices is None:
        choices = [(x.blocks[0], x.blocks[0][0]) for x in xs]
    if len(choices) != k:
        raise InvalidChoice("one choice per configuration is required")
    offs, off = [], 0
    for x in xs:
        offs.append(off)
        off += x.v
    blocks = []
    for i, (x, (blk, pt)) in enumerate(zip(xs, choices)):
        blk = tuple(sorted(blk))
        if blk not in x.blocks or pt not in blk:
            raise InvalidChoice(f"choice {i} is not a block with one of its points")
        for b in x.blocks:
            if b != blk:
                blocks.append(tuple(p + offs[i] for p in b))
    for i, (blk, pt) in enumerate(choices):
        j = (i + 1) % k
        nxt_pt = choices[j][1] + offs[j]
        blocks.append(tuple(p + offs[i] for p in blk if p != pt) + (nxt_pt,))
    return Configuration(off, tuple(blocks))


def _orbit_reps(items, gens, act):
    index = {it: i for i, it in enumerate(items)}
    parent = list(range(len(items)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for i, it in enumerate(items):
            j = index[act(g, it)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    return [it for i, it in enumerate(items) if find(i) == i]


def stitch2_choices(x: Configuration, y: Configuration, reduce: bool = True):
    """All stitch choices, one per orbit of Aut(x) x Aut(y) when ``reduce``."""
    ordered = [p for b in x.blocks for p in permutations(b)]
    points = list(range(y.v))
    if reduce:
        from .isomorphism import automorphism_group
        gx, _ = automorphism_group(x)
        gy, _ = automorphism_group(y)
        ordered = _orbit_reps(ordered, gx, lambda g, t: tuple(g[p] for p in t))
        points = _orbit_reps(points, gy, lambda g, p: g[p])
    return [StitchChoice(b, p) for b in ordered for p in points]


# -- strong colouring families ---------------------------------------------------

def _extend_inf0_chis4(x, s):
    a, b, c = _tri_labels(s)
    n = x.v
    return _replace(x, [(a(0), b(0), c(1)), (a(1), b(1), c(2))],
                    [(n, b(0), c(2)), (n, a(0), c(1)), (n, a(1), b(1))], n + 1)


def _extend_inf1_chis4(x, s):
    a, b, c = _tri_labels(s)
    n = x.v
    return _replace(x, [(a(0), b(1), c(0)), (a(1), b(2), c(1))],
                    [(n, a(0), b(2)), (n, b(1), c(0)), (n, a(1), c(1))], n + 1)


def _extend_inf2_chis4(x, s):
    a, b, c = _tri_labels(s)
    n = x.v
    return _replace(x, [(a(1), b(0), c(0)), (a(2), b(1), c(1))],
                    [(n, a(2), c(0)), (n, a(1), b(0)), (n, b(1), c(1))], n + 1)


def chis4_family(v: int) -> Configuration:
    """A configuration with strong chromatic number 4."""
    if v < 8:
        raise OutOfRange("v must be at least 8")
    if v in (8, 12):
        return cyclic_config(v)
    if v in CHIS4_SMALL:
        return parse_config(CHIS4_SMALL[v])
    r = v % 3 or 3
    s = (v - r) // 3
    x = triangle_family(s)
    x = _extend_inf0_chis4(x, s)
    if r >= 2:
        x = _extend_inf1_chis4(x, s)
    if r == 3:
        x = _extend_inf2_chis4(x, s)
    return x


def _relabel_to_contain(base: Configuration, block, offset: int, target):
    """Relabel ``base`` so that ``block`` becomes ``target - offset``.

    Returns the relabelled configuration and the point map used.
    """
    want = [t - offset for t in target]
    rest_src = [p for p in range(base.v) if p not in block]
    rest_dst = [q for q in range(base.v) if q not in want]
    perm = [0] * base.v
    for src, dst in list(zip(block, want)) + list(zip(rest_src, rest_dst)):
        perm[src] = dst
    return base.relabel(perm), perm


def chis5_family(v: int, base: Configuration | None = None, with_colouring: bool = False):
    """A configuration with strong chromatic number 5, for v = 0 (mod 4), v >= 12.

    For v >= 20, C_11 is combined with a strongly 5-chromatic base on v - 11
    points (default C_{v-11}).
    """
    if v % 4 or v < 12:
        raise OutOfRange("need v = 0 (mod 4) and v >= 12")
    if v in (12, 16):
        x = parse_config(CHIS5_12 if v == 12 else CHIS5_16)
        if with_colouring:
            from .colouring import strong_chromatic_number
            return x, strong_chromatic_number(x)[1]
        return x
    from .colouring import colour_graph, verify_strong_colouring
    if base is None:
        base = cyclic_config(v - 11)
    if base.v != v - 11 or len(connected_components(base)) != 1:
        raise BadBase("base must be a connected configuration on v - 11 points")
    col = colour_graph(associated_graph(base), 5)
    if col is None or colour_graph(associated_graph(base), 4) is not None:
        raise BadBase("base must be strongly 5-chromatic")
    blk = base.blocks[0]
    moved, perm = _relabel_to_contain(base, blk, 11, (11, 12, 13))
    base_col = [0] * base.v
    for p in range(base.v):
        base_col[perm[p]] = col[p]
    blocks = [b for b in cyclic_config(11).blocks if b != (0, 1, 3)]
    blocks += [tuple(p + 11 for p in b) for b in moved.blocks if b != (0, 1, 2)]
    blocks += [(1, 3, 11), (0, 12, 13)]
    x = Configuration(v, tuple(blocks))
    if not with_colouring:
        return x
    red, yellow, blue = base_col[0], base_col[1], base_col[2]
    green, white = [k for k in range(5) if k not in (red, yellow, blue)]
    head = {4: red, 8: red, 2: yellow, 9: yellow, 3: blue, 7: blue,
            0: green, 1: green, 5: green, 6: white, 10: white}
    colours = tuple([head[p] for p in range(11)] + base_col)
    c = Colouring(colours)
    assert verify_strong_colouring(x, c)
    return x, c


def chis6_family(v: int, base: Configuration | None = None) -> Configuration:
    """A configuration with strong chromatic number 6 (v = 11 or v >= 13).

    For v >= 14, C_7 is combined with a connected base on v - 7 points
    (default C_{v-7}).
    """
    if v == 11:
        return cyclic_config(11)
    if v == 13:
        from .corpus import corpus_get
        return corpus_get("bsfree-13").config
    if v < 14:
        raise OutOfRange("need v = 11 or v >= 13")
    if base is None:
        base = cyclic_config(v - 7)
    if base.v != v - 7 or len(connected_components(base)) != 1:
        raise BadBase("base must be a connected configuration on v - 7 points")
    moved, _ = _relabel_to_contain(base, base.blocks[0], 7, (7, 8, 9))
    blocks = [b for b in cyclic_config(7).blocks if b != (0, 1, 3)]
    blocks += [tuple(p + 7 for p in b) for b in moved.blocks if b != (0, 1, 2)]
    blocks += [(1, 3, 7), (0, 8, 9)]
    return Configuration(v, tuple(blocks))


# -- strongly 3-chromatic families ------------------------------------------------

def _col3iso_triangles(s: int, literal: bool = False):
    """Monochromatic triangles of the red/green/blue edge rules on a, b, c."""
    a, b, c = _tri_labels(s)
    red_ab = (lambda i: b(0)) if literal else (lambda i: b(i - 1))
    rules = {
        "red": [(a(i), red_ab(i)) for i in range(s)] + [(b(i), c(i)) for i in range(s)]
        + [(c(i), a(i + 1)) for i in range(s)],
        "green": [(a(i), b(i)) for i in range(s)] + [(b(i), c(i + 1)) for i in range(s)]
        + [(c(i), a(i - 1)) for i in range(s)],
        "blue": [(a(i), b(i + 1)) for i in range(s)] + [(b(i), c(i - 1)) for i in range(s)]
        + [(c(i), a(i)) for i in range(s)],
    }
    triangles = []
    for edges in rules.values():
        adj = {}
        for u, w in edges:
            adj.setdefault(u, set()).add(w)
            adj.setdefault(w, set()).add(u)
        for u in range(s):
            nb = adj.get(u, set())
            ws = [w for w in nb if s <= w < 2 * s]
            zs = [z for z in nb if z >= 2 * s]
            for w in ws:
                for z in zs:
                    if z in adj.get(w, set()):
                        triangles.append((u, w, z))
    return triangles


def _gamma(s: int) -> Graph:
    edges = [(i, s + j) for i in range(s) for j in range(s) if (i - j) % s in (0, 1, s - 1)]
    return Graph.from_edges(2 * s, edges, [0] * s + [1] * s)


def col3iso_family(s: int):
    """Strongly 3-chromatic configuration on 3s points whose three colour-class
    deleted graphs are all isomorphic to Gamma (a_i ~ b_j iff i - j in {-1,0,1}).

    Returns ``(configuration, colouring, gamma)``.
    """
    if s < 3:
        raise OutOfRange("s must be at least 3")
    triangles = _col3iso_triangles(s)
    edges = set()
    for t in triangles:
        for i in range(3):
            for j in range(i + 1, 3):
                e = tuple(sorted((t[i], t[j])))
                assert e not in edges, "monochromatic triangles must be edge-disjoint"
                edges.add(e)
    assert len(triangles) == 3 * s and len(edges) == 9 * s
    x = Configuration(3 * s, tuple(triangles))
    colouring = Colouring(tuple([0] * s + [1] * s + [2] * s))
    return x, colouring, _gamma(s)


def delgraph_config(gamma: Graph):
    """Strongly 3-chromatic configuration on 3m points whose associated graph
    minus the third colour class is ``gamma`` (cubic bipartite, order 2m).

    Returns ``(configuration, colouring)``; points of the two parts of gamma
    come first (in vertex order per part), then the m added points.
    """
    if gamma.n % 2 or gamma.n < 6 or any(len(a) != 3 for a in gamma.adj):
        raise PreconditionViolated("gamma must be cubic bipartite of order 2m, m >= 3")
    side = list(gamma.parts) if gamma.parts is not None else _bipartition(gamma)
    if side is None:
        raise PreconditionViolated("gamma must be bipartite")
    groups = three_k2_decomposition(gamma)
    m = gamma.n // 2
    v1 = [u for u in range(gamma.n) if side[u] == 0]
    v2 = [u for u in range(gamma.n) if side[u] == 1]
    label = {u: i for i, u in enumerate(v1 + v2)}
    blocks = []
    for t, group in enumerate(groups):
        for u, w in group:
            blocks.append((label[u], label[w], 2 * m + t))
    x = Configuration(3 * m, tuple(blocks))
    colours = tuple([0] * len(v1) + [1] * len(v2) + [2] * m)
    return x, Colouring(colours)
