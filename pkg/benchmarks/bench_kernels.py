"""Time the pure-Python and compiled kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N] [--json]

Each workload is run on every available backend; outputs are compared so a
speedup is only reported when both backends agree.
"""
import argparse
import json
import sys
import time

from symconf import _kernels
from symconf.constructions import cyclic_config
from symconf.core import levi_graph
from symconf.corpus import corpus_get


def _levi_inputs(x):
    g = levi_graph(x)
    return g.n, [list(a) for a in g.adj], list(g.parts)


def workloads():
    c24 = cyclic_config(24)
    b22 = corpus_get("bsfree-22").config
    b32 = corpus_get("bsfree-32").config
    b25 = corpus_get("bsfree25-01").config
    n, adj, colours = _levi_inputs(b25)
    hn, hadj, _ = _levi_inputs(b22)
    return [
        ("orderly v=10", lambda k: sum(1 for _ in k.orderly_matrices(10, 10))),
        ("canonical labeling 25_3 Levi", lambda k: tuple(k.canonical_labeling(n, adj, colours)[0])),
        ("hamiltonian 22_3 Levi (none)", lambda k: k.hamiltonian_cycle(hn, hadj)),
        ("blocking search 32_3 (none)", lambda k: k.blocking_set(b32.v, [list(b) for b in b32.blocks])),
        ("no blocking set of size 9 in C_24", lambda k: k.blocking_set(c24.v, [list(b) for b in c24.blocks], 9)),
        ("permanent 22_3", lambda k: k.permanent(b22.incidence_matrix())),
    ]


def bench(fn, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - t)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    backends = [_kernels.pykernels] + ([_kernels.ckernels] if _kernels.ckernels else [])
    rows = []
    for name, fn in workloads():
        times, results = {}, {}
        for k in backends:
            times[k.BACKEND], results[k.BACKEND] = bench(fn, k, args.repeat)
        agree = len({repr(r) for r in results.values()}) == 1
        row = {"workload": name, "agree": agree, **{f"{b}_s": round(t, 5) for b, t in times.items()}}
        if len(times) == 2:
            row["speedup"] = round(times["python"] / times["cython"], 1)
        rows.append(row)
    if args.json:
        json.dump(rows, sys.stdout, indent=2)
        print()
        return 0
    print(f"{'workload':34} {'python s':>10} {'cython s':>10} {'speedup':>8}  agree")
    for r in rows:
        print(f"{r['workload']:34} {r['python_s']:10.4f} {r.get('cython_s', float('nan')):10.4f} "
              f"{r.get('speedup', float('nan')):8.1f}  {r['agree']}")
    return 0 if all(r["agree"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
