"""Blocking sets (weak 2-colourings), det-extremality and circular words."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import _kernels
from .core import Configuration
from .errors import BoundExceeded

PERMANENT_BOUND = 26
SPECTRUM_CHECK_BOUND = 14
FORBIDDEN_SUBWORDS = ("0000", "0010", "1101", "1111")


@dataclass(frozen=True)
class BlockingProfile:
    has: bool
    min_size: int | None
    sizes: frozenset = field(default_factory=frozenset)
    witness_min: tuple | None = None
    chi_w: int = 3

    def as_dict(self):
        return {
            "has": self.has,
            "min_size": self.min_size,
            "sizes": sorted(self.sizes),
            "witness_min": list(self.witness_min) if self.witness_min else None,
            "chi_w": self.chi_w,
        }


def is_blocking_set(x: Configuration, points) -> bool:
    s = set(points)
    return all(0 < len(s.intersection(b)) < 3 for b in x.blocks)


def find_blocking_set(x: Configuration, size: int | None = None):
    res = _kernels.blocking_set(x.v, [list(b) for b in x.blocks], -1 if size is None else size)
    return tuple(res) if res is not None else None


def blocking_profile(x: Configuration, verify_sizes: bool | None = None) -> BlockingProfile:
    """Existence, minimum size and size spectrum of blocking sets.

    Sizes are searched directly for ``v <= 14`` (or when ``verify_sizes``);
    otherwise the spectrum is the interval ``[q, v - q]``.
    """
    v = x.v
    if find_blocking_set(x) is None:
        return BlockingProfile(False, None, frozenset(), None, 3)
    q = -(-v // 3)
    while True:
        witness = find_blocking_set(x, q)
        if witness is not None:
            break
        q += 1
    assert is_blocking_set(x, witness)
    if verify_sizes is None:
        verify_sizes = v <= SPECTRUM_CHECK_BOUND
    if verify_sizes:
        sizes = frozenset(s for s in range(q, v - q + 1) if find_blocking_set(x, s) is not None)
    else:
        sizes = frozenset(range(q, v - q + 1))
    return BlockingProfile(True, q, sizes, witness, 2)


# -- det-extremality ---------------------------------------------------------

def bareiss_determinant(matrix) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def permanent(matrix) -> int:
    return _kernels.permanent([list(map(int, r)) for r in matrix])


@dataclass(frozen=True)
class DetExtremality:
    extremal: bool
    det: int
    per: int

    def __bool__(self):
        return self.extremal


def is_det_extremal(x: Configuration, bound: int = PERMANENT_BOUND) -> DetExtremality:
    """Compare |det| and the permanent of the incidence matrix."""
    if x.v > bound:
        raise BoundExceeded(f"v={x.v} exceeds permanent bound {bound}")
    m = x.incidence_matrix()
    d = bareiss_determinant(m)
    p = permanent(m)
    return DetExtremality(abs(d) == p, d, p)


# -- circular words for the cyclic configurations -----------------------------

def word_is_blocking(word) -> bool:
    """True iff the circular word avoids the four forbidden subwords.

    Accepts a string of '0'/'1' or a sequence of bits.
    """
    w = "".join(str(int(b)) for b in word) if not isinstance(word, str) else word
    if len(w) < 4:
        raise ValueError("word must have length at least 4")
    ext = w + w[:3]
    return not any(ext[i:i + 4] in FORBIDDEN_SUBWORDS for i in range(len(w)))


def word_points(word):
    w = word if isinstance(word, str) else "".join(str(int(b)) for b in word)
    return [i for i, ch in enumerate(w) if ch == "1"]


_EPSILON = (0, 1, 2, 2, 2)


def cyclic_min_formula(v: int) -> int:
    return 2 * (v // 5) + _EPSILON[v % 5]


def cyclic_min_blocking(v: int):
    """Minimum blocking-set size of C_v together with a witness word."""
    if v < 8:
        raise ValueError("v must be at least 8")
    r = v % 5
    if r == 0:
        word = "11000" * (v // 5)
    elif r == 1:
        word = "11000" * (v // 5) + "1"
    elif r == 2:
        word = "111000" * 2 + "11000" * ((v - 12) // 5)
    elif r == 3:
        word = "1100" * 2 + "11000" * ((v - 8) // 5)
    else:
        word = "11000" + "1100" + "11000" * ((v - 9) // 5)
    m = cyclic_min_formula(v)
    assert len(word) == v and word.count("1") == m
    assert word_is_blocking(word)
    return m, word
