"""Pure-Python search kernels.

Reference implementation of every routine in ``_ckernels.pyx``.  Both
backends follow the same algorithms step for step, so they return identical
results (same canonical labelings, same witnesses, same enumeration order).
"""
from collections import deque

MASK64 = (1 << 64) - 1
_HASH_MUL = 1000003

BACKEND = "python"


def _popcount(x):
    return bin(x).count("1")


# ---------------------------------------------------------------------------
# Orderly generation of lexmax incidence matrices
# ---------------------------------------------------------------------------

def _is_lexmax(rows, ncols):
    """True iff no row/column permutation of ``rows`` is lexicographically larger.

    Rows are bitmasks with column 0 in the most significant position, so
    integer comparison is lexicographic comparison.
    """
    k = len(rows)
    used = [False] * k

    def value(r, cells):
        out = 0
        start = 0
        for c in cells:
            cnt = _popcount(r & c)
            if cnt:
                out |= ((1 << cnt) - 1) << (ncols - start - cnt)
            start += _popcount(c)
        return out

    def rec(j, cells):
        if j == k:
            return True
        target = rows[j]
        for i in range(k):
            if used[i]:
                continue
            r = rows[i]
            x = value(r, cells)
            if x > target:
                return False
            if x == target:
                split = []
                for c in cells:
                    a = c & r
                    b = c & ~r
                    if a:
                        split.append(a)
                    if b:
                        split.append(b)
                used[i] = True
                ok = rec(j + 1, split)
                used[i] = False
                if not ok:
                    return False
        return True

    return rec(0, [(1 << ncols) - 1])


def orderly_matrices(nrows, ncols, short_rows=0, short_cols=0, prefix=(), depth=-1):
    """Canonical (lexmax) linear 0/1 matrices with row weights 3 and column sums 3.

    ``short_rows`` rows have weight 2 instead of 3 and ``short_cols`` columns
    end with sum 2 instead of 3.  No two rows share more than one column.

    With ``depth >= 0`` the canonical partial matrices with exactly ``depth``
    rows extending ``prefix`` are returned instead of complete ones, which is
    how callers split the search into independent jobs.
    """
    if 3 * nrows - short_rows != 3 * ncols - short_cols:
        return []
    target_depth = nrows if depth < 0 else depth
    out = []
    rows = list(prefix)
    colcnt = [0] * ncols
    colvec = [0] * ncols
    nshort = 0
    for i, r in enumerate(rows):
        w = _popcount(r)
        if w == 2:
            nshort += 1
        for j in range(ncols):
            if (r >> (ncols - 1 - j)) & 1:
                colcnt[j] += 1
                colvec[j] |= 1 << (nrows - 1 - i)

    def feasible(remaining):
        over = 0
        for c in colcnt:
            if 2 - c > remaining:
                return False
            if 3 - c > remaining:
                over += 1
        return over <= short_cols

    def finished():
        twos = 0
        for c in colcnt:
            if c == 2:
                twos += 1
            elif c != 3:
                return False
        return twos == short_cols

    def rec(nshort):
        k = len(rows)
        if k == target_depth:
            if k < nrows or finished():
                out.append(tuple(rows))
            return
        prev = rows[-1] if rows else (1 << ncols)
        remaining = nrows - k - 1
        weights = [3]
        if nshort < short_rows:
            weights.append(2)
        open_cols = [j for j in range(ncols) if colcnt[j] < 3]
        for w in weights:
            for combo in _combinations(open_cols, w):
                ok = True
                r = 0
                for j in combo:
                    r |= 1 << (ncols - 1 - j)
                if r >= prev:
                    continue
                for j in combo:
                    if j > 0 and colvec[j - 1] == colvec[j] and not (r >> (ncols - j)) & 1:
                        ok = False
                        break
                if not ok:
                    continue
                for m in rows:
                    if _popcount(r & m) > 1:
                        ok = False
                        break
                if not ok:
                    continue
                bit = 1 << (nrows - 1 - k)
                for j in combo:
                    colcnt[j] += 1
                    colvec[j] |= bit
                rows.append(r)
                if feasible(remaining) and _is_lexmax(rows, ncols):
                    rec(nshort + (1 if w == 2 else 0))
                rows.pop()
                for j in combo:
                    colcnt[j] -= 1
                    colvec[j] &= ~bit

    if len(rows) > target_depth:
        return []
    rec(nshort)
    return out


def _combinations(items, k):
    n = len(items)
    if k == 3:
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    yield (items[a], items[b], items[c])
    elif k == 2:
        for a in range(n):
            for b in range(a + 1, n):
                yield (items[a], items[b])


# ---------------------------------------------------------------------------
# Canonical labeling by individualization and refinement
# ---------------------------------------------------------------------------

def _hmix(h, x):
    return (h * _HASH_MUL + x + 1) & MASK64


class _Partition:
    __slots__ = ("lab", "cend", "cellof")

    def __init__(self, lab, cend, cellof):
        self.lab = lab
        self.cend = cend
        self.cellof = cellof

    def copy(self):
        return _Partition(self.lab[:], self.cend[:], self.cellof[:])


def _refine(p, adj, n, queue_starts):
    """Refine ``p`` in place to an equitable partition; return the trace hash."""
    lab, cend, cellof = p.lab, p.cend, p.cellof
    inq = [False] * n
    queue = deque()
    for s in queue_starts:
        if not inq[s]:
            inq[s] = True
            queue.append(s)
    h = 0
    count = [0] * n
    while queue:
        w = queue.popleft()
        inq[w] = False
        for i in range(n):
            count[i] = 0
        for pos in range(w, cend[w]):
            for x in adj[lab[pos]]:
                count[x] += 1
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
                    cell = sorted(lab[s:e], key=lambda x: (count[x], x))
                    lab[s:e] = cell
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
                                inq[start] = True
                                queue.append(start)
                            start = pos
            s = e
    return h


def _individualize(p, v):
    lab, cend, cellof = p.lab, p.cend, p.cellof
    s = cellof[v]
    e = cend[s]
    i = lab.index(v, s, e)
    lab[s], lab[i] = lab[i], lab[s]
    cend[s] = s + 1
    cend[s + 1] = e
    for q in range(s + 1, e):
        cellof[lab[q]] = s + 1
    return s


def _target_cell(p, n):
    best = -1
    best_size = n + 1
    s = 0
    while s < n:
        e = p.cend[s]
        size = e - s
        if 1 < size < best_size:
            best = s
            best_size = size
        s = e
    return best


def _certificate(lab, adj, n):
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    cert = []
    for i in range(n):
        nb = sorted(pos[u] for u in adj[lab[i]])
        cert.append(len(nb))
        cert.extend(nb)
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
    """Canonical labeling of a vertex-coloured graph.

    Returns ``(lab, generators, order)`` where ``lab[i]`` is the vertex placed
    at canonical position ``i``, ``generators`` generate the colour-preserving
    automorphism group and ``order`` is its size.
    """
    if n == 0:
        return [], [], 1
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
    root = _Partition(lab, cend, cellof)
    root_trace = _refine(root, adj, n, starts)

    st = {
        "first_lab": None, "first_cert": None, "first_tr": None,
        "best_lab": None, "best_cert": None, "best_tr": None,
        "first_path": [], "best_path": [], "gens": [],
    }
    uf = _UF(n)
    order_factors = []

    def leaf(p, path, traces):
        cert = _certificate(p.lab, adj, n)
        if st["first_lab"] is None:
            st["first_lab"] = p.lab[:]
            st["first_cert"] = cert
            st["first_tr"] = traces[:]
            st["first_path"] = path[:]
            st["best_lab"] = p.lab[:]
            st["best_cert"] = cert
            st["best_tr"] = traces[:]
            st["best_path"] = path[:]
            return len(path)
        if traces == st["first_tr"] and cert == st["first_cert"]:
            _record(st["first_lab"], p.lab)
            return _divergence(path, st["first_path"])
        key_cmp = _cmp((traces, cert), (st["best_tr"], st["best_cert"]))
        if key_cmp == 0:
            _record(st["best_lab"], p.lab)
            return _divergence(path, st["best_path"])
        if key_cmp > 0:
            st["best_lab"] = p.lab[:]
            st["best_cert"] = cert
            st["best_tr"] = traces[:]
            st["best_path"] = path[:]
        return len(path)

    def _record(lab1, lab2):
        gamma = [0] * n
        for i in range(n):
            gamma[lab1[i]] = lab2[i]
        st["gens"].append(gamma)
        for i in range(n):
            uf.union(i, gamma[i])

    def search(p, path, traces, on_first):
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
            tr = _refine(q, adj, n, [s])
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
            root = uf.find(fp)
            order_factors.append(sum(1 for x in range(n) if uf.find(x) == root))
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
    # return to the node at depth i (which has path[:i])
    return i


def _cmp(a, b):
    return (a > b) - (a < b)


# ---------------------------------------------------------------------------
# Hamiltonian cycles
# ---------------------------------------------------------------------------

_UNDECIDED, _IN, _OUT = 0, 1, 2


def hamiltonian_cycle(n, adj):
    """Return a Hamiltonian cycle as a vertex list, or None.

    Branches on edges; a vertex with two chosen edges loses its others, a
    vertex with two remaining edges keeps both, and a path fragment may only
    close when it covers every vertex.
    """
    if n < 3:
        return None
    edges = []
    eid = {}
    inc = [[] for _ in range(n)]
    for u in range(n):
        for w in adj[u]:
            if u < w:
                eid[(u, w)] = eid[(w, u)] = len(edges)
                inc[u].append(len(edges))
                inc[w].append(len(edges))
                edges.append((u, w))
    m = len(edges)
    for u in range(n):
        if len(inc[u]) < 2:
            return None
    state = {
        "es": [_UNDECIDED] * m,
        "cin": [0] * n,
        "cav": [len(inc[u]) for u in range(n)],
        "end": list(range(n)),
        "fsize": [0] * n,
        "nin": 0,
    }

    def copy(s):
        return {k: (v[:] if isinstance(v, list) else v) for k, v in s.items()}

    def set_in(s, e, queue):
        es = s["es"]
        if es[e] == _IN:
            return True
        if es[e] == _OUT:
            return False
        u, w = edges[e]
        eu, ew = s["end"][u], s["end"][w]
        if eu == w:
            # closes a cycle
            if s["nin"] + 1 != n:
                return False
        es[e] = _IN
        s["nin"] += 1
        s["cin"][u] += 1
        s["cin"][w] += 1
        if s["cin"][u] > 2 or s["cin"][w] > 2:
            return False
        if eu != w:
            size = s["fsize"][eu] + s["fsize"][ew] + 1
            s["end"][eu] = ew
            s["end"][ew] = eu
            s["fsize"][eu] = size
            s["fsize"][ew] = size
            if size < n - 1:
                f = eid.get((eu, ew))
                if f is not None and es[f] == _UNDECIDED:
                    queue.append((f, _OUT))
        for x in (u, w):
            if s["cin"][x] == 2:
                for f in inc[x]:
                    if es[f] == _UNDECIDED:
                        queue.append((f, _OUT))
        return True

    def set_out(s, e, queue):
        es = s["es"]
        if es[e] == _OUT:
            return True
        if es[e] == _IN:
            return False
        es[e] = _OUT
        for x in edges[e]:
            s["cav"][x] -= 1
            if s["cav"][x] < 2:
                return False
            if s["cav"][x] == 2:
                for f in inc[x]:
                    if es[f] == _UNDECIDED:
                        queue.append((f, _IN))
        return True

    def propagate(s, queue):
        while queue:
            e, val = queue.popleft()
            ok = set_in(s, e, queue) if val == _IN else set_out(s, e, queue)
            if not ok:
                return False
        return True

    def connected(s):
        es = s["es"]
        seen = [False] * n
        seen[0] = True
        stack = [0]
        cnt = 1
        while stack:
            u = stack.pop()
            for f in inc[u]:
                if es[f] != _OUT:
                    a, b = edges[f]
                    x = b if a == u else a
                    if not seen[x]:
                        seen[x] = True
                        cnt += 1
                        stack.append(x)
        return cnt == n

    def choose(s):
        # an undecided edge at a fragment end with fewest options
        es = s["es"]
        best = -1
        best_key = None
        for u in range(n):
            if s["cin"][u] == 2:
                continue
            undecided = s["cav"][u] - s["cin"][u]
            if undecided == 0:
                continue
            key = (0 if s["cin"][u] == 1 else 1, undecided, u)
            if best_key is None or key < best_key:
                best_key = key
                best = u
        if best < 0:
            return -1
        for f in inc[best]:
            if es[f] == _UNDECIDED:
                return f
        return -1

    def rec(s):
        if s["nin"] == n:
            return s
        if not connected(s):
            return None
        e = choose(s)
        if e < 0:
            return None
        for val in (_IN, _OUT):
            t = copy(s)
            q = deque([(e, val)])
            if propagate(t, q):
                r = rec(t)
                if r is not None:
                    return r
        return None

    q = deque()
    for u in range(n):
        if state["cav"][u] == 2:
            for f in inc[u]:
                q.append((f, _IN))
    if not propagate(state, q):
        return None
    final = rec(state)
    if final is None:
        return None
    nbr = [[] for _ in range(n)]
    for e, val in enumerate(final["es"]):
        if val == _IN:
            u, w = edges[e]
            nbr[u].append(w)
            nbr[w].append(u)
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

def blocking_set(v, blocks, size=-1):
    """Find a blocking set (of exactly ``size`` points if ``size >= 0``).

    Returns the sorted point list or None.  Search is a 2-colouring with unit
    propagation: a block with two points on one side forces its third point
    onto the other side.
    """
    nb = len(blocks)
    pblocks = [[] for _ in range(v)]
    for i, b in enumerate(blocks):
        for p in b:
            pblocks[p].append(i)
    lo = size if size >= 0 else 0
    hi_in = size if size >= 0 else v
    hi_out = v - size if size >= 0 else v

    col = [-1] * v
    nin = [0] * nb
    nout = [0] * nb
    tot = [0, 0]

    def assign(p, c, trail):
        stack = [(p, c)]
        while stack:
            p, c = stack.pop()
            if col[p] != -1:
                if col[p] != c:
                    return False
                continue
            col[p] = c
            trail.append(p)
            tot[c] += 1
            bad = tot[1] > hi_in or tot[0] > hi_out
            for b in pblocks[p]:
                if c == 1:
                    nin[b] += 1
                else:
                    nout[b] += 1
                if nin[b] == 3 or nout[b] == 3:
                    bad = True
            if bad:
                return False
            for b in pblocks[p]:
                if nin[b] == 2 and nout[b] == 0:
                    for x in blocks[b]:
                        if col[x] == -1:
                            stack.append((x, 0))
                elif nout[b] == 2 and nin[b] == 0:
                    for x in blocks[b]:
                        if col[x] == -1:
                            stack.append((x, 1))
        return True

    def undo(trail, mark):
        while len(trail) > mark:
            p = trail.pop()
            c = col[p]
            col[p] = -1
            tot[c] -= 1
            for b in pblocks[p]:
                if c == 1:
                    nin[b] -= 1
                else:
                    nout[b] -= 1

    def pick():
        best = -1
        best_assigned = -1
        for b in range(nb):
            a = nin[b] + nout[b]
            if a < 3 and a > best_assigned:
                for x in blocks[b]:
                    if col[x] == -1:
                        best = x
                        best_assigned = a
                        break
                if best_assigned == 2:
                    break
        return best

    trail = []

    def rec():
        if tot[1] + (v - tot[0] - tot[1]) < lo:
            return False
        p = pick()
        if p < 0:
            return tot[1] >= lo
        for c in (1, 0):
            mark = len(trail)
            if assign(p, c, trail) and rec():
                return True
            undo(trail, mark)
        return False

    symmetric = size < 0 or 2 * size == v
    if symmetric and v > 0:
        if not assign(0, 1, trail):
            return None
    if rec():
        return [p for p in range(v) if col[p] == 1]
    return None


# ---------------------------------------------------------------------------
# Permanent
# ---------------------------------------------------------------------------

def permanent(matrix):
    """Permanent of a square 0/1 matrix by Ryser's formula over a Gray code."""
    n = len(matrix)
    if n == 0:
        return 1
    if any(x not in (0, 1) for row in matrix for x in row):
        return _weighted_permanent(matrix)
    colrows = [[i for i in range(n) if matrix[i][j]] for j in range(n)]
    rowsum = [0] * n
    zeros = n
    inset = [False] * n
    total = 0
    sign = 1
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        if inset[j]:
            inset[j] = False
            for i in colrows[j]:
                rowsum[i] -= 1
                if rowsum[i] == 0:
                    zeros += 1
        else:
            inset[j] = True
            for i in colrows[j]:
                if rowsum[i] == 0:
                    zeros -= 1
                rowsum[i] += 1
        sign = -sign
        if zeros == 0:
            prod = 1
            for x in rowsum:
                prod *= x
            total += sign * prod
    return total if n % 2 == 0 else -total


def _weighted_permanent(matrix):
    # general integer entries: Ryser with running row sums, no zero tracking
    n = len(matrix)
    rowsum = [0] * n
    inset = [False] * n
    total = 0
    sign = 1
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        d = -1 if inset[j] else 1
        inset[j] = not inset[j]
        for i in range(n):
            rowsum[i] += d * matrix[i][j]
        sign = -sign
        prod = 1
        for x in rowsum:
            prod *= x
        total += sign * prod
    return total if n % 2 == 0 else -total
