# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Step-for-step ports of ``_pykernels``; every function returns exactly what
its pure-Python counterpart returns.
"""
from cpython cimport array
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport uint64_t, int64_t

import array as _array
from collections import deque

from . import _pykernels

BACKEND = "cython"

cdef uint64_t _HASH_MUL = 1000003


cdef inline int _pc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


# ---------------------------------------------------------------------------
# Orderly generation
# ---------------------------------------------------------------------------

cdef struct Lex:
    int k
    int ncols
    uint64_t *rows
    char *used
    uint64_t *cells      # (k + 1) * 64 cell masks, one layer per depth
    int *ncells


cdef uint64_t _lex_value(uint64_t r, uint64_t *cells, int nc, int ncols) nogil:
    cdef uint64_t out = 0
    cdef int start = 0, cnt, t
    for t in range(nc):
        cnt = _pc(r & cells[t])
        if cnt:
            out |= ((<uint64_t>1 << cnt) - 1) << (ncols - start - cnt)
        start += _pc(cells[t])
    return out


cdef bint _lex_rec(Lex *L, int j) nogil:
    if j == L.k:
        return True
    cdef uint64_t target = L.rows[j]
    cdef uint64_t *cells = L.cells + j * 64
    cdef int nc = L.ncells[j]
    cdef uint64_t *nxt = L.cells + (j + 1) * 64
    cdef int i, t, m
    cdef uint64_t r, x, a, b
    for i in range(L.k):
        if L.used[i]:
            continue
        r = L.rows[i]
        x = _lex_value(r, cells, nc, L.ncols)
        if x > target:
            return False
        if x == target:
            m = 0
            for t in range(nc):
                a = cells[t] & r
                b = cells[t] & ~r
                if a:
                    nxt[m] = a
                    m += 1
                if b:
                    nxt[m] = b
                    m += 1
            L.ncells[j + 1] = m
            L.used[i] = 1
            if not _lex_rec(L, j + 1):
                L.used[i] = 0
                return False
            L.used[i] = 0
    return True


cdef bint _is_lexmax(uint64_t *rows, int k, int ncols, uint64_t *cellbuf, int *ncells, char *used) nogil:
    cdef Lex L
    L.k = k
    L.ncols = ncols
    L.rows = rows
    L.used = used
    L.cells = cellbuf
    L.ncells = ncells
    memset(used, 0, k)
    cellbuf[0] = (<uint64_t>1 << ncols) - 1
    ncells[0] = 1
    return _lex_rec(&L, 0)


cdef struct Orderly:
    int nrows
    int ncols
    int short_rows
    int short_cols
    int target_depth
    int k
    uint64_t *rows
    int *colcnt
    uint64_t *colvec
    uint64_t *cellbuf
    int *ncells
    char *used
    int *open_cols


cdef bint _feasible(Orderly *S, int remaining) nogil:
    cdef int over = 0, j, c
    for j in range(S.ncols):
        c = S.colcnt[j]
        if 2 - c > remaining:
            return False
        if 3 - c > remaining:
            over += 1
    return over <= S.short_cols


cdef bint _finished(Orderly *S) nogil:
    cdef int twos = 0, j
    for j in range(S.ncols):
        if S.colcnt[j] == 2:
            twos += 1
        elif S.colcnt[j] != 3:
            return False
    return twos == S.short_cols


cdef bint _try_row(Orderly *S, uint64_t r, int *combo, int w, uint64_t prev) nogil:
    cdef int t, j
    if r >= prev:
        return False
    for t in range(w):
        j = combo[t]
        if j > 0 and S.colvec[j - 1] == S.colvec[j] and not ((r >> (S.ncols - j)) & 1):
            return False
    for t in range(S.k):
        if _pc(r & S.rows[t]) > 1:
            return False
    return True


cdef void _orderly_rec(Orderly *S, int nshort, list out):
    cdef int k = S.k
    cdef int t
    if k == S.target_depth:
        if k < S.nrows or _finished(S):
            out.append(tuple([S.rows[t] for t in range(k)]))
        return
    cdef uint64_t prev = S.rows[k - 1] if k > 0 else (<uint64_t>1 << S.ncols)
    cdef int remaining = S.nrows - k - 1
    cdef int *open_cols = S.open_cols + k * 64
    cdef int nopen = 0, j, a, b, c, w, wi, nw
    cdef int combo[3]
    cdef uint64_t r, bit
    for j in range(S.ncols):
        if S.colcnt[j] < 3:
            open_cols[nopen] = j
            nopen += 1
    nw = 2 if nshort < S.short_rows else 1
    bit = <uint64_t>1 << (S.nrows - 1 - k)
    for wi in range(nw):
        w = 3 if wi == 0 else 2
        for a in range(nopen):
            for b in range(a + 1, nopen):
                for c in range(b + 1, nopen if w == 3 else b + 2):
                    combo[0] = open_cols[a]
                    combo[1] = open_cols[b]
                    r = (<uint64_t>1 << (S.ncols - 1 - combo[0])) | (<uint64_t>1 << (S.ncols - 1 - combo[1]))
                    if w == 3:
                        combo[2] = open_cols[c]
                        r |= <uint64_t>1 << (S.ncols - 1 - combo[2])
                    if not _try_row(S, r, combo, w, prev):
                        continue
                    for t in range(w):
                        S.colcnt[combo[t]] += 1
                        S.colvec[combo[t]] |= bit
                    S.rows[k] = r
                    S.k = k + 1
                    if _feasible(S, remaining) and _is_lexmax(S.rows, k + 1, S.ncols, S.cellbuf, S.ncells, S.used):
                        _orderly_rec(S, nshort + (1 if w == 2 else 0), out)
                    S.k = k
                    for t in range(w):
                        S.colcnt[combo[t]] -= 1
                        S.colvec[combo[t]] &= ~bit


def orderly_matrices(int nrows, int ncols, int short_rows=0, int short_cols=0, prefix=(), int depth=-1):
    """Compiled ``_pykernels.orderly_matrices``."""
    if 3 * nrows - short_rows != 3 * ncols - short_cols:
        return []
    if nrows > 63 or ncols > 63:
        return _pykernels.orderly_matrices(nrows, ncols, short_rows, short_cols, prefix, depth)
    cdef Orderly S
    cdef list out = []
    cdef int i, j, nshort = 0
    cdef uint64_t r
    prefix = list(prefix)
    S.nrows = nrows
    S.ncols = ncols
    S.short_rows = short_rows
    S.short_cols = short_cols
    S.target_depth = nrows if depth < 0 else depth
    if len(prefix) > S.target_depth:
        return []
    S.rows = <uint64_t *> malloc(64 * sizeof(uint64_t))
    S.colcnt = <int *> malloc(64 * sizeof(int))
    S.colvec = <uint64_t *> malloc(64 * sizeof(uint64_t))
    S.cellbuf = <uint64_t *> malloc(65 * 64 * sizeof(uint64_t))
    S.ncells = <int *> malloc(65 * sizeof(int))
    S.used = <char *> malloc(64)
    S.open_cols = <int *> malloc(65 * 64 * sizeof(int))
    try:
        memset(S.colcnt, 0, 64 * sizeof(int))
        memset(S.colvec, 0, 64 * sizeof(uint64_t))
        S.k = len(prefix)
        for i in range(S.k):
            r = prefix[i]
            S.rows[i] = r
            if _pc(r) == 2:
                nshort += 1
            for j in range(ncols):
                if (r >> (ncols - 1 - j)) & 1:
                    S.colcnt[j] += 1
                    S.colvec[j] |= <uint64_t>1 << (nrows - 1 - i)
        _orderly_rec(&S, nshort, out)
    finally:
        free(S.rows)
        free(S.colcnt)
        free(S.colvec)
        free(S.cellbuf)
        free(S.ncells)
        free(S.used)
        free(S.open_cols)
    return out


# ---------------------------------------------------------------------------
# Canonical labeling
# ---------------------------------------------------------------------------

cdef inline uint64_t _hmix(uint64_t h, uint64_t x) nogil:
    return h * _HASH_MUL + x + 1


cdef class _Partition:
    cdef public array.array lab, cend, cellof

    def copy(self):
        cdef _Partition p = _Partition.__new__(_Partition)
        p.lab = array.copy(self.lab)
        p.cend = array.copy(self.cend)
        p.cellof = array.copy(self.cellof)
        return p


cdef class _Graph:
    cdef int n
    cdef array.array off, nbr
    cdef array.array count, inq, queue, tmp


cdef void _sort_by_count(int *lab, int s, int e, int *count) nogil:
    # insertion sort on (count, vertex)
    cdef int i, j, x
    for i in range(s + 1, e):
        x = lab[i]
        j = i - 1
        while j >= s and (count[lab[j]] > count[x] or (count[lab[j]] == count[x] and lab[j] > x)):
            lab[j + 1] = lab[j]
            j -= 1
        lab[j + 1] = x


cdef uint64_t _refine(_Partition p, _Graph g, list starts):
    cdef int n = g.n
    cdef int *lab = p.lab.data.as_ints
    cdef int *cend = p.cend.data.as_ints
    cdef int *cellof = p.cellof.data.as_ints
    cdef int *off = g.off.data.as_ints
    cdef int *nbr = g.nbr.data.as_ints
    cdef int *count = g.count.data.as_ints
    cdef int *inq = g.inq.data.as_ints
    cdef int *queue = g.queue.data.as_ints
    cdef int qhead = 0, qtail = 0, qcap = n + 1
    cdef int s, w, pos, e, c0, start, q, t, v
    cdef bint uniform
    cdef uint64_t h = 0
    memset(inq, 0, n * sizeof(int))
    for s in starts:
        if not inq[s]:
            inq[s] = 1
            queue[qtail] = s
            qtail = (qtail + 1) % qcap
    while qhead != qtail:
        w = queue[qhead]
        qhead = (qhead + 1) % qcap
        inq[w] = 0
        memset(count, 0, n * sizeof(int))
        for pos in range(w, cend[w]):
            v = lab[pos]
            for t in range(off[v], off[v + 1]):
                count[nbr[t]] += 1
        h = _hmix(h, w)
        s = 0
        while s < n:
            e = cend[s]
            if e - s > 1:
                c0 = count[lab[s]]
                uniform = True
                for pos in range(s + 1, e):
                    if count[lab[pos]] != c0:
                        uniform = False
                        break
                if not uniform:
                    _sort_by_count(lab, s, e, count)
                    h = _hmix(h, s)
                    start = s
                    for pos in range(s + 1, e + 1):
                        if pos == e or count[lab[pos]] != count[lab[pos - 1]]:
                            cend[start] = pos
                            for q in range(start, pos):
                                cellof[lab[q]] = start
                            h = _hmix(h, pos - start)
                            h = _hmix(h, count[lab[start]])
                            if not inq[start]:
                                inq[start] = 1
                                queue[qtail] = start
                                qtail = (qtail + 1) % qcap
                            start = pos
            s = e
    return h


cdef int _individualize(_Partition p, int v):
    cdef int *lab = p.lab.data.as_ints
    cdef int *cend = p.cend.data.as_ints
    cdef int *cellof = p.cellof.data.as_ints
    cdef int s = cellof[v]
    cdef int e = cend[s]
    cdef int i = s, q
    while lab[i] != v:
        i += 1
    lab[i] = lab[s]
    lab[s] = v
    cend[s] = s + 1
    cend[s + 1] = e
    for q in range(s + 1, e):
        cellof[lab[q]] = s + 1
    return s


cdef int _target_cell(_Partition p, int n):
    cdef int *cend = p.cend.data.as_ints
    cdef int best = -1, best_size = n + 1, s = 0, e, size
    while s < n:
        e = cend[s]
        size = e - s
        if 1 < size < best_size:
            best = s
            best_size = size
        s = e
    return best


cdef list _certificate(_Partition p, _Graph g):
    cdef int n = g.n
    cdef int *lab = p.lab.data.as_ints
    cdef int *off = g.off.data.as_ints
    cdef int *nbr = g.nbr.data.as_ints
    cdef int *pos = g.tmp.data.as_ints
    cdef int i, t, v, d, a, b, x
    cdef int buf[256]
    cdef list cert = []
    for i in range(n):
        pos[lab[i]] = i
    for i in range(n):
        v = lab[i]
        d = off[v + 1] - off[v]
        if d > 256:
            nb = sorted(pos[nbr[t]] for t in range(off[v], off[v + 1]))
            cert.append(d)
            cert.extend(nb)
            continue
        for t in range(d):
            buf[t] = pos[nbr[off[v] + t]]
        for a in range(1, d):
            x = buf[a]
            b = a - 1
            while b >= 0 and buf[b] > x:
                buf[b + 1] = buf[b]
                b -= 1
            buf[b + 1] = x
        cert.append(d)
        for t in range(d):
            cert.append(buf[t])
    return cert


class _UF:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def canonical_labeling(n, adj, colours):
    """Compiled ``_pykernels.canonical_labeling``."""
    if n == 0:
        return [], [], 1
    cdef _Graph g = _Graph()
    g.n = n
    offs = [0]
    flat = []
    for u in range(n):
        flat.extend(adj[u])
        offs.append(len(flat))
    g.off = _array.array("i", offs)
    g.nbr = _array.array("i", flat)
    g.count = _array.array("i", [0] * n)
    g.inq = _array.array("i", [0] * n)
    g.queue = _array.array("i", [0] * (n + 1))
    g.tmp = _array.array("i", [0] * n)

    lab = sorted(range(n), key=lambda v: (colours[v], v))
    cend = [0] * n
    cellof = [0] * n
    starts = []
    s = 0
    for i in range(1, n + 1):
        if i == n or colours[lab[i]] != colours[lab[i - 1]]:
            cend[s] = i
            for q in range(s, i):
                cellof[lab[q]] = s
            starts.append(s)
            s = i
    cdef _Partition root = _Partition.__new__(_Partition)
    root.lab = _array.array("i", lab)
    root.cend = _array.array("i", cend)
    root.cellof = _array.array("i", cellof)
    root_trace = _refine(root, g, starts)

    st = {
        "first_lab": None, "first_cert": None, "first_tr": None,
        "best_lab": None, "best_cert": None, "best_tr": None,
        "first_path": [], "best_path": [], "gens": [],
    }
    uf = _UF(n)
    order_factors = []

    def _record(lab1, lab2):
        gamma = [0] * n
        for i in range(n):
            gamma[lab1[i]] = lab2[i]
        st["gens"].append(gamma)
        for i in range(n):
            uf.union(i, gamma[i])

    def leaf(_Partition p, path, traces):
        cert = _certificate(p, g)
        plab = p.lab.tolist()
        if st["first_lab"] is None:
            st["first_lab"] = plab
            st["first_cert"] = cert
            st["first_tr"] = traces[:]
            st["first_path"] = path[:]
            st["best_lab"] = plab
            st["best_cert"] = cert
            st["best_tr"] = traces[:]
            st["best_path"] = path[:]
            return len(path)
        if traces == st["first_tr"] and cert == st["first_cert"]:
            _record(st["first_lab"], plab)
            return _divergence(path, st["first_path"])
        key_cmp = _cmp((traces, cert), (st["best_tr"], st["best_cert"]))
        if key_cmp == 0:
            _record(st["best_lab"], plab)
            return _divergence(path, st["best_path"])
        if key_cmp > 0:
            st["best_lab"] = plab
            st["best_cert"] = cert
            st["best_tr"] = traces[:]
            st["best_path"] = path[:]
        return len(path)

    def search(_Partition p, path, traces, on_first):
        level = len(path)
        t = _target_cell(p, n)
        if t < 0:
            return leaf(p, path, traces)
        if st["first_lab"] is not None and not on_first:
            ft = st["first_tr"]
            bt = st["best_tr"]
            if traces != ft[:len(traces)] and traces < bt[:len(traces)]:
                return level
        cell = sorted(p.lab[t:p.cend[t]])
        tried = []
        for w in cell:
            first_child = on_first and not tried
            if on_first and tried:
                rw = uf.find(w)
                if any(uf.find(x) == rw for x in tried):
                    continue
            q = p.copy()
            s = _individualize(q, w)
            tr = _refine(q, g, [s])
            path.append(w)
            traces.append(tr)
            back = search(q, path, traces, on_first and (first_child or False))
            path.pop()
            traces.pop()
            tried.append(w)
            if back < level:
                return back
        if on_first:
            fp = st["first_path"][level]
            r = uf.find(fp)
            order_factors.append(sum(1 for x in range(n) if uf.find(x) == r))
        return level

    search(root, [], [root_trace], True)
    order = 1
    for f in order_factors:
        order *= f
    return st["best_lab"], st["gens"], order


def _divergence(path, other):
    i = 0
    m = min(len(path), len(other))
    while i < m and path[i] == other[i]:
        i += 1
    return i


def _cmp(a, b):
    return (a > b) - (a < b)


# ---------------------------------------------------------------------------
# Hamiltonian cycles
# ---------------------------------------------------------------------------

cdef enum:
    UNDECIDED = 0
    IN = 1
    OUT = 2


cdef struct HState:
    char *es
    int *cin
    int *cav
    int *end
    int *fsize
    int *nin


cdef struct HCtx:
    int n
    int m
    int *eu
    int *ew
    int *ioff
    int *inc
    int *eidmat        # n * n edge ids, -1 when absent
    int *qe
    char *qv
    int qcap
    int qhead
    int qtail
    int *stack
    char *seen
    char *buf          # per-depth state storage
    size_t stride


cdef void _hs_bind(HCtx *C, HState *s, char *mem) nogil:
    cdef int n = C.n
    s.cin = <int *> mem
    s.cav = s.cin + n
    s.end = s.cav + n
    s.fsize = s.end + n
    s.es = <char *> (s.fsize + n)
    s.nin = <int *> (mem + C.stride - sizeof(int))


cdef inline void _push(HCtx *C, int e, char v) nogil:
    C.qe[C.qtail] = e
    C.qv[C.qtail] = v
    C.qtail += 1


cdef bint _set_in(HCtx *C, HState *s, int e) nogil:
    cdef char *es = s.es
    cdef int u, w, eu, ew, size, f, x, t, k
    if es[e] == IN:
        return True
    if es[e] == OUT:
        return False
    u = C.eu[e]
    w = C.ew[e]
    eu = s.end[u]
    ew = s.end[w]
    if eu == w:
        if s.nin[0] + 1 != C.n:
            return False
    es[e] = IN
    s.nin[0] += 1
    s.cin[u] += 1
    s.cin[w] += 1
    if s.cin[u] > 2 or s.cin[w] > 2:
        return False
    if eu != w:
        size = s.fsize[eu] + s.fsize[ew] + 1
        s.end[eu] = ew
        s.end[ew] = eu
        s.fsize[eu] = size
        s.fsize[ew] = size
        if size < C.n - 1:
            f = C.eidmat[eu * C.n + ew]
            if f >= 0 and es[f] == UNDECIDED:
                _push(C, f, OUT)
    for k in range(2):
        x = u if k == 0 else w
        if s.cin[x] == 2:
            for t in range(C.ioff[x], C.ioff[x + 1]):
                f = C.inc[t]
                if es[f] == UNDECIDED:
                    _push(C, f, OUT)
    return True


cdef bint _set_out(HCtx *C, HState *s, int e) nogil:
    cdef char *es = s.es
    cdef int x, k, t, f
    if es[e] == OUT:
        return True
    if es[e] == IN:
        return False
    es[e] = OUT
    for k in range(2):
        x = C.eu[e] if k == 0 else C.ew[e]
        s.cav[x] -= 1
        if s.cav[x] < 2:
            return False
        if s.cav[x] == 2:
            for t in range(C.ioff[x], C.ioff[x + 1]):
                f = C.inc[t]
                if es[f] == UNDECIDED:
                    _push(C, f, IN)
    return True


cdef bint _propagate(HCtx *C, HState *s) nogil:
    cdef int e
    cdef char v
    cdef bint ok
    while C.qhead < C.qtail:
        e = C.qe[C.qhead]
        v = C.qv[C.qhead]
        C.qhead += 1
        ok = _set_in(C, s, e) if v == IN else _set_out(C, s, e)
        if not ok:
            return False
    return True


cdef bint _h_connected(HCtx *C, HState *s) nogil:
    cdef int n = C.n, top = 0, cnt = 1, u, t, f, x
    memset(C.seen, 0, n)
    C.seen[0] = 1
    C.stack[top] = 0
    top = 1
    while top > 0:
        top -= 1
        u = C.stack[top]
        for t in range(C.ioff[u], C.ioff[u + 1]):
            f = C.inc[t]
            if s.es[f] != OUT:
                x = C.ew[f] if C.eu[f] == u else C.eu[f]
                if not C.seen[x]:
                    C.seen[x] = 1
                    cnt += 1
                    C.stack[top] = x
                    top += 1
    return cnt == n


cdef int _h_choose(HCtx *C, HState *s) nogil:
    cdef int best = -1, u, und, k0, bk0 = 0, bund = 0, t, f
    for u in range(C.n):
        if s.cin[u] == 2:
            continue
        und = s.cav[u] - s.cin[u]
        if und == 0:
            continue
        k0 = 0 if s.cin[u] == 1 else 1
        if best < 0 or k0 < bk0 or (k0 == bk0 and und < bund):
            best = u
            bk0 = k0
            bund = und
    if best < 0:
        return -1
    for t in range(C.ioff[best], C.ioff[best + 1]):
        f = C.inc[t]
        if s.es[f] == UNDECIDED:
            return f
    return -1


cdef int _h_rec(HCtx *C, int depth) nogil:
    # state for this node lives at layer ``depth``; returns the layer holding
    # the final state, or -1
    cdef HState s, t
    cdef int e, k, r
    cdef char val
    _hs_bind(C, &s, C.buf + depth * C.stride)
    if s.nin[0] == C.n:
        return depth
    if not _h_connected(C, &s):
        return -1
    e = _h_choose(C, &s)
    if e < 0:
        return -1
    for k in range(2):
        val = IN if k == 0 else OUT
        memcpy(C.buf + (depth + 1) * C.stride, C.buf + depth * C.stride, C.stride)
        _hs_bind(C, &t, C.buf + (depth + 1) * C.stride)
        C.qhead = 0
        C.qtail = 0
        _push(C, e, val)
        if _propagate(C, &t):
            r = _h_rec(C, depth + 1)
            if r >= 0:
                return r
    return -1


def hamiltonian_cycle(n, adj):
    """Compiled ``_pykernels.hamiltonian_cycle``."""
    if n < 3:
        return None
    edges = []
    inc = [[] for _ in range(n)]
    for u in range(n):
        for w in adj[u]:
            if u < w:
                inc[u].append(len(edges))
                inc[w].append(len(edges))
                edges.append((u, w))
    cdef int m = len(edges)
    for u in range(n):
        if len(inc[u]) < 2:
            return None
    cdef HCtx C
    cdef HState s
    cdef int i, t, layer, maxdeg = max(len(a) for a in inc)
    C.n = n
    C.m = m
    C.qcap = m * (2 * maxdeg + 2) + 2 * m + 16
    # layout per layer: 4n ints, m edge states (padded), then nin
    C.stride = (4 * n * sizeof(int) + m + sizeof(int) - 1) // sizeof(int) * sizeof(int) + sizeof(int)
    C.eu = <int *> malloc(m * sizeof(int))
    C.ew = <int *> malloc(m * sizeof(int))
    C.ioff = <int *> malloc((n + 1) * sizeof(int))
    C.inc = <int *> malloc(2 * m * sizeof(int))
    C.eidmat = <int *> malloc(n * n * sizeof(int))
    C.qe = <int *> malloc(C.qcap * sizeof(int))
    C.qv = <char *> malloc(C.qcap)
    C.stack = <int *> malloc(n * sizeof(int))
    C.seen = <char *> malloc(n)
    C.buf = <char *> malloc((m + 2) * C.stride)
    try:
        for i in range(n * n):
            C.eidmat[i] = -1
        for i in range(m):
            C.eu[i] = edges[i][0]
            C.ew[i] = edges[i][1]
            C.eidmat[C.eu[i] * n + C.ew[i]] = i
            C.eidmat[C.ew[i] * n + C.eu[i]] = i
        t = 0
        for u in range(n):
            C.ioff[u] = t
            for f in inc[u]:
                C.inc[t] = f
                t += 1
        C.ioff[n] = t
        memset(C.buf, 0, C.stride)
        _hs_bind(&C, &s, C.buf)
        for u in range(n):
            s.cav[u] = len(inc[u])
            s.end[u] = u
        s.nin[0] = 0
        C.qhead = 0
        C.qtail = 0
        for u in range(n):
            if s.cav[u] == 2:
                for t in range(C.ioff[u], C.ioff[u + 1]):
                    _push(&C, C.inc[t], IN)
        if not _propagate(&C, &s):
            return None
        layer = _h_rec(&C, 0)
        if layer < 0:
            return None
        _hs_bind(&C, &s, C.buf + layer * C.stride)
        nbr = [[] for _ in range(n)]
        for i in range(m):
            if s.es[i] == IN:
                nbr[C.eu[i]].append(C.ew[i])
                nbr[C.ew[i]].append(C.eu[i])
    finally:
        free(C.eu)
        free(C.ew)
        free(C.ioff)
        free(C.inc)
        free(C.eidmat)
        free(C.qe)
        free(C.qv)
        free(C.stack)
        free(C.seen)
        free(C.buf)
    cycle = [0]
    prev, cur = -1, 0
    while True:
        a, b = nbr[cur]
        nxt = a if a != prev else b
        if nxt == 0:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    return cycle


# ---------------------------------------------------------------------------
# Blocking sets
# ---------------------------------------------------------------------------

cdef struct BS:
    int v
    int nb
    int *blocks        # nb * 3
    int *poff
    int *pbl
    int *col
    int *nin
    int *nout
    int tot0
    int tot1
    int lo
    int hi_in
    int hi_out
    int *trail
    int ntrail
    int *stk


cdef bint _bs_assign(BS *B, int p0, int c0) nogil:
    cdef int top = 0, p, c, t, b, k, x
    cdef bint bad
    B.stk[0] = p0
    B.stk[1] = c0
    top = 1
    while top > 0:
        top -= 1
        p = B.stk[2 * top]
        c = B.stk[2 * top + 1]
        if B.col[p] != -1:
            if B.col[p] != c:
                return False
            continue
        B.col[p] = c
        B.trail[B.ntrail] = p
        B.ntrail += 1
        if c == 1:
            B.tot1 += 1
        else:
            B.tot0 += 1
        bad = B.tot1 > B.hi_in or B.tot0 > B.hi_out
        for t in range(B.poff[p], B.poff[p + 1]):
            b = B.pbl[t]
            if c == 1:
                B.nin[b] += 1
            else:
                B.nout[b] += 1
            if B.nin[b] == 3 or B.nout[b] == 3:
                bad = True
        if bad:
            return False
        for t in range(B.poff[p], B.poff[p + 1]):
            b = B.pbl[t]
            if B.nin[b] == 2 and B.nout[b] == 0:
                for k in range(3):
                    x = B.blocks[3 * b + k]
                    if B.col[x] == -1:
                        B.stk[2 * top] = x
                        B.stk[2 * top + 1] = 0
                        top += 1
            elif B.nout[b] == 2 and B.nin[b] == 0:
                for k in range(3):
                    x = B.blocks[3 * b + k]
                    if B.col[x] == -1:
                        B.stk[2 * top] = x
                        B.stk[2 * top + 1] = 1
                        top += 1
    return True


cdef void _bs_undo(BS *B, int mark) nogil:
    cdef int p, c, t, b
    while B.ntrail > mark:
        B.ntrail -= 1
        p = B.trail[B.ntrail]
        c = B.col[p]
        B.col[p] = -1
        if c == 1:
            B.tot1 -= 1
        else:
            B.tot0 -= 1
        for t in range(B.poff[p], B.poff[p + 1]):
            b = B.pbl[t]
            if c == 1:
                B.nin[b] -= 1
            else:
                B.nout[b] -= 1


cdef int _bs_pick(BS *B) nogil:
    cdef int best = -1, best_assigned = -1, b, a, k, x
    for b in range(B.nb):
        a = B.nin[b] + B.nout[b]
        if a < 3 and a > best_assigned:
            for k in range(3):
                x = B.blocks[3 * b + k]
                if B.col[x] == -1:
                    best = x
                    best_assigned = a
                    break
            if best_assigned == 2:
                break
    return best


cdef bint _bs_rec(BS *B) nogil:
    cdef int p, k, c, mark
    if B.tot1 + (B.v - B.tot0 - B.tot1) < B.lo:
        return False
    p = _bs_pick(B)
    if p < 0:
        return B.tot1 >= B.lo
    for k in range(2):
        c = 1 if k == 0 else 0
        mark = B.ntrail
        if _bs_assign(B, p, c) and _bs_rec(B):
            return True
        _bs_undo(B, mark)
    return False


def blocking_set(v, blocks, size=-1):
    """Compiled ``_pykernels.blocking_set``."""
    if any(len(b) != 3 for b in blocks):
        return _pykernels.blocking_set(v, blocks, size)
    cdef BS B
    cdef int nb = len(blocks), i, k, t, p
    B.v = v
    B.nb = nb
    B.lo = size if size >= 0 else 0
    B.hi_in = size if size >= 0 else v
    B.hi_out = v - size if size >= 0 else v
    B.tot0 = 0
    B.tot1 = 0
    B.ntrail = 0
    pblocks = [[] for _ in range(v)]
    for i, b in enumerate(blocks):
        for p in b:
            pblocks[p].append(i)
    B.blocks = <int *> malloc((3 * nb + 1) * sizeof(int))
    B.poff = <int *> malloc((v + 1) * sizeof(int))
    B.pbl = <int *> malloc((3 * nb + 1) * sizeof(int))
    B.col = <int *> malloc((v + 1) * sizeof(int))
    B.nin = <int *> malloc((nb + 1) * sizeof(int))
    B.nout = <int *> malloc((nb + 1) * sizeof(int))
    B.trail = <int *> malloc((v + 1) * sizeof(int))
    B.stk = <int *> malloc((2 * (3 * nb * 3 + v + 4)) * sizeof(int))
    try:
        for i in range(nb):
            for k in range(3):
                B.blocks[3 * i + k] = blocks[i][k]
            B.nin[i] = 0
            B.nout[i] = 0
        t = 0
        for p in range(v):
            B.poff[p] = t
            for i in pblocks[p]:
                B.pbl[t] = i
                t += 1
            B.col[p] = -1
        B.poff[v] = t
        if (size < 0 or 2 * size == v) and v > 0:
            if not _bs_assign(&B, 0, 1):
                return None
        if _bs_rec(&B):
            return [p for p in range(v) if B.col[p] == 1]
        return None
    finally:
        free(B.blocks)
        free(B.poff)
        free(B.pbl)
        free(B.col)
        free(B.nin)
        free(B.nout)
        free(B.trail)
        free(B.stk)


# ---------------------------------------------------------------------------
# Permanent
# ---------------------------------------------------------------------------

def permanent(matrix):
    """Compiled ``_pykernels.permanent`` for 0/1 matrices small enough that
    every Ryser term fits in 64 bits; anything else is delegated."""
    cdef int n = len(matrix)
    if n == 0:
        return 1
    if n > 40 or any(x not in (0, 1) for row in matrix for x in row):
        return _pykernels.permanent(matrix)
    bound = 1 << n
    for row in matrix:
        bound *= max(1, sum(row))
    if bound >= (1 << 62):
        return _pykernels.permanent(matrix)
    cdef int *colrows = <int *> malloc(n * n * sizeof(int))
    cdef int *ncol = <int *> malloc(n * sizeof(int))
    cdef int *rowsum = <int *> malloc(n * sizeof(int))
    cdef char *inset = <char *> malloc(n)
    cdef int i, j, t, zeros = n
    cdef uint64_t k, limit = (<uint64_t>1) << n
    cdef int64_t total = 0, prod, sign = 1
    try:
        for j in range(n):
            ncol[j] = 0
            for i in range(n):
                if matrix[i][j]:
                    colrows[j * n + ncol[j]] = i
                    ncol[j] += 1
        memset(rowsum, 0, n * sizeof(int))
        memset(inset, 0, n)
        with nogil:
            for k in range(1, limit):
                j = __builtin_ctzll(k)
                if inset[j]:
                    inset[j] = 0
                    for t in range(ncol[j]):
                        i = colrows[j * n + t]
                        rowsum[i] -= 1
                        if rowsum[i] == 0:
                            zeros += 1
                else:
                    inset[j] = 1
                    for t in range(ncol[j]):
                        i = colrows[j * n + t]
                        if rowsum[i] == 0:
                            zeros -= 1
                        rowsum[i] += 1
                sign = -sign
                if zeros == 0:
                    prod = 1
                    for i in range(n):
                        prod *= rowsum[i]
                    total += sign * prod
    finally:
        free(colrows)
        free(ncol)
        free(rowsum)
        free(inset)
    return int(total if n % 2 == 0 else -total)


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
