"""Command-line interface: ``symconf <command> ...``.

Exit codes: 0 ok, 1 validation error, 2 mismatch, 3 bound exceeded, 4 usage.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .errors import (BoundExceeded, CompactOverflow, MalformedToken, MismatchReport,
                     PreconditionViolated, SymconfError, UnknownSymbol, ValidationFailed)

EXIT_OK, EXIT_VALIDATION, EXIT_MISMATCH, EXIT_BOUND, EXIT_USAGE = 0, 1, 2, 3, 4
LONG_HAMILTON_V = 24
TABLE4_DEFAULT_MAX = 25


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj, out):
    out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _hist(h: dict):
    return {("none" if k is None else str(k)): n for k, n in h.items()}


def _format(x, style="auto"):
    from .core import format_config
    if style == "auto":
        try:
            return format_config(x, "compact")
        except CompactOverflow:
            return format_config(x, "decimal")
    return format_config(x, style)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_source(arg):
    """A configuration named ``fano``, ``cyclic:V``, a corpus id, a file or block text."""
    from .constructions import cyclic_config, fano
    from .core import parse_config, read_configs
    from .corpus import corpus_get

    if arg == "fano":
        return fano()
    if arg.startswith("cyclic:"):
        return cyclic_config(int(arg.split(":", 1)[1]))
    try:
        return corpus_get(arg).config
    except KeyError:
        pass
    if arg == "-" or os.path.exists(arg):
        configs = read_configs(_read_text(arg))
        if not configs:
            raise UsageError(f"no configuration in {arg}")
        return configs[0]
    return parse_config(arg)


# -- analyze ---------------------------------------------------------------------

def analyze_config(x, hamilton_long=False):
    """JSON-ready report of everything we know how to compute about ``x``."""
    from .blocking import PERMANENT_BOUND, blocking_profile, is_det_extremal
    from .colouring import strong_chromatic_number
    from .core import is_connected, levi_graph
    from .graphs import config_connectivity, is_hamiltonian
    from .isomorphism import canonical_form, symmetry_profile

    connected = is_connected(x)
    bp = blocking_profile(x)
    report = {
        "v": x.v,
        "valid": True,
        "blocks": _format(x),
        "connected": connected,
        "connectivity": config_connectivity(x) if connected else 0,
        "blocking": bp.as_dict(),
        "chi_w": bp.chi_w,
        "digest": canonical_form(x).digest,
    }
    chi_s, colouring = strong_chromatic_number(x)
    report["chi_s"] = chi_s
    report["strong_colouring"] = colouring.to_pairs()
    if x.v <= PERMANENT_BOUND:
        d = is_det_extremal(x)
        report["det_extremal"] = {"extremal": d.extremal, "det": d.det, "per": d.per}
    else:
        report["det_extremal"] = None
    report["symmetry"] = symmetry_profile(x).as_dict()
    long_job = x.v > LONG_HAMILTON_V
    report["levi_hamiltonian_long"] = long_job
    if long_job and not hamilton_long:
        report["levi_hamiltonian"] = None
    else:
        report["levi_hamiltonian"] = is_hamiltonian(levi_graph(x)).hamiltonian
    return report


def _analyze_text(text, hamilton_long):
    from .core import Configuration, parse_blocks, validate
    blocks = parse_blocks(text)
    rep = validate(blocks)
    if not rep.ok:
        return {"valid": False, "violations": [{"rule": v.rule, "indices": list(v.indices)}
                                               for v in rep.violations]}
    return analyze_config(Configuration.from_blocks(blocks), hamilton_long)


def cmd_analyze(args, out):
    from .core import iter_config_texts
    texts = list(iter_config_texts(_read_text(args.file)))
    if args.jobs > 1 and len(texts) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_analyze_text, texts, [args.long] * len(texts)))
    else:
        reports = [_analyze_text(t, args.long) for t in texts]
    _dump(reports, out)
    for r in reports:
        if not r["valid"]:
            print("validation failed: " + ", ".join(v["rule"] for v in r["violations"]), file=sys.stderr)
            return EXIT_VALIDATION
    return EXIT_OK


# -- construct ---------------------------------------------------------------------

def _delgraph_source(arg):
    from .constructions import _gamma
    from .core import Graph, levi_graph
    if arg == "k33":
        return Graph.from_edges(6, [(i, 3 + j) for i in range(3) for j in range(3)], [0] * 3 + [1] * 3)
    if arg.startswith("gamma:"):
        return _gamma(int(arg.split(":", 1)[1]))
    return levi_graph(_load_source(arg))


def cmd_construct(args, out):
    from . import constructions as c

    fam, p = args.family, args.params

    def need(k):
        if len(p) != k:
            raise UsageError(f"{fam} takes {k} parameter(s)")
        return p

    def ints():
        try:
            return [int(t) for t in p]
        except ValueError as exc:
            raise UsageError(f"{fam} expects integer parameters") from exc

    colouring = None
    if fam == "cyclic":
        need(1)
        base = tuple(int(t) for t in args.base.split(",")) if args.base else (0, 1, 3)
        x = c.cyclic_config(ints()[0], base)
    elif fam == "martinetti":
        need(1)
        x = c.martinetti_cyclic_odd(ints()[0])
    elif fam == "triangle":
        need(1)
        x = c.triangle_family(ints()[0])
    elif fam == "minblocking":
        need(1)
        x = c.minblocking_family(ints()[0])
    elif fam == "nearmin":
        need(1)
        x = c.nearmin_family(ints()[0], args.offset)
    elif fam == "stitch2":
        need(2)
        x = c.stitch2(_load_source(p[0]), _load_source(p[1]))
    elif fam == "stitch3":
        need(3)
        x = c.stitch3([_load_source(t) for t in p])
    elif fam == "chis4":
        need(1)
        x = c.chis4_family(ints()[0])
    elif fam == "chis5":
        need(1)
        x = c.chis5_family(ints()[0])
    elif fam == "chis6":
        need(1)
        x = c.chis6_family(ints()[0])
    elif fam == "col3iso":
        need(1)
        x, colouring, _ = c.col3iso_family(ints()[0])
    elif fam == "delgraph":
        need(1)
        x, colouring = c.delgraph_config(_delgraph_source(p[0]))
    else:
        raise UsageError(f"unknown family {fam}")
    if args.canonical:
        from .isomorphism import canonical_config
        x = canonical_config(x)
        colouring = None
    out.write(_format(x, args.format) + "\n")
    if colouring is not None and args.colouring:
        out.write("# colouring " + " ".join(colouring.to_pairs()) + "\n")
    return EXIT_OK


# -- enumerate / tables ------------------------------------------------------------

def _bound_for(args):
    from .enumeration import ENUM_BOUND
    return max(args.v, ENUM_BOUND) if args.long else ENUM_BOUND


def cmd_enumerate(args, out):
    from .enumeration import enumerate_configs, tabulate_properties
    bound = _bound_for(args)
    if args.counts:
        configs = enumerate_configs(args.v, connected_only=False, bound=bound, jobs=args.jobs)
        row = tabulate_properties(args.v, jobs=args.jobs, configs=configs)
        row["min_blocking"] = _hist(row["min_blocking"])
        row["chi_s"] = _hist(row["chi_s"])
        _dump(row, out)
        return EXIT_OK
    for x in enumerate_configs(args.v, connected_only=args.connected, bound=bound, jobs=args.jobs):
        out.write(_format(x, args.format) + "\n")
    return EXIT_OK


def build_tables(max_v, table4_max=TABLE4_DEFAULT_MAX, jobs=1):
    from .enumeration import enumerate_3conn_bsfree, tabulate_properties
    from .isomorphism import symmetry_profile
    t1, t2, t3 = [], [], []
    for v in range(7, max_v + 1):
        row = tabulate_properties(v, jobs=jobs)
        t1.append({"v": v, "connected": row["connected"], "min_blocking": _hist(row["min_blocking"])})
        t2.append({k: row[k] for k in "vabcdefghi"})
        t3.append({"v": v, "total": row["connected"], "chi_s": _hist(row["chi_s"])})
    t4 = []
    levels = {}
    for v in range(7, table4_max + 1, 6):
        classes = enumerate_3conn_bsfree(v, levels=levels, jobs=jobs)
        profiles = [symmetry_profile(x) for x in classes]
        t4.append({"v": v, "configurations": len(classes),
                   "self_dual": sum(p.self_dual for p in profiles),
                   "self_polar": sum(p.self_polar for p in profiles)})
    return {"table1": t1, "table2": t2, "table3": t3, "table4": t4}


def cmd_tables(args, out):
    from .enumeration import ENUM_BOUND
    if args.max_v > ENUM_BOUND and not args.long:
        raise BoundExceeded(f"--max-v {args.max_v} exceeds enumeration bound {ENUM_BOUND}; pass --long")
    _dump(build_tables(args.max_v, args.table4_max, args.jobs), out)
    return EXIT_OK


# -- canon / isomorphic / corpus ----------------------------------------------------

def cmd_canon(args, out):
    from .core import read_configs
    from .isomorphism import canonical_form
    rows = []
    for x in read_configs(_read_text(args.file)):
        cf = canonical_form(x)
        rows.append({"v": x.v, "canonical": cf.text, "digest": cf.digest})
    _dump(rows, out)
    return EXIT_OK


def cmd_isomorphic(args, out):
    from .isomorphism import are_isomorphic
    _dump(are_isomorphic(_load_source(args.first), _load_source(args.second)), out)
    return EXIT_OK


def cmd_corpus(args, out):
    from .corpus import corpus_load, corpus_select, corpus_verify
    entries = corpus_select(args.prefix) if args.prefix else corpus_load()
    report = corpus_verify(entries, skip=tuple(args.skip), jobs=args.jobs)
    _dump({
        "checked": report.checked,
        "entries": len(entries),
        "ok": report.ok,
        "mismatches": [{"id": i, "key": k, "expected": e, "actual": a} for i, k, e, a in report.mismatches],
    }, out)
    if not report.ok:
        raise MismatchReport(report.mismatches)
    return EXIT_OK


# -- entry point -----------------------------------------------------------------

def build_parser():
    p = _Parser(prog="symconf", description="Symmetric configurations v_3: analysis, constructions, enumeration.")
    p.add_argument("--version", action="version", version=f"symconf {__version__}")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output is unchanged)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="report properties of each configuration in a file")
    a.add_argument("file", help="input file, or - for stdin")
    a.add_argument("--long", action="store_true", help="also run Hamiltonicity for v > 24")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="build a configuration from a named family")
    c.add_argument("family", choices=["cyclic", "martinetti", "triangle", "minblocking", "nearmin",
                                      "stitch2", "stitch3", "chis4", "chis5", "chis6", "col3iso", "delgraph"])
    c.add_argument("params", nargs="*")
    c.add_argument("--base", help="base block for cyclic, e.g. 0,1,3")
    c.add_argument("--offset", type=int, default=1, choices=[1, 2], help="nearmin offset")
    c.add_argument("--canonical", action="store_true", help="emit the canonical representative")
    c.add_argument("--colouring", action="store_true", help="append the construction colouring")
    c.add_argument("--format", default="auto", choices=["auto", "compact", "decimal"])
    c.set_defaults(func=cmd_construct)

    e = sub.add_parser("enumerate", help="all configurations on v points up to isomorphism")
    e.add_argument("v", type=int)
    e.add_argument("--connected", action="store_true", help="connected classes only")
    e.add_argument("--long", action="store_true", help="allow v beyond the default bound")
    e.add_argument("--counts", action="store_true", help="emit the table row instead of the classes")
    e.add_argument("--format", default="auto", choices=["auto", "compact", "decimal"])
    e.set_defaults(func=cmd_enumerate)

    k = sub.add_parser("canon", help="canonical forms and digests")
    k.add_argument("file")
    k.set_defaults(func=cmd_canon)

    i = sub.add_parser("isomorphic", help="are two configurations isomorphic")
    i.add_argument("first")
    i.add_argument("second")
    i.set_defaults(func=cmd_isomorphic)

    co = sub.add_parser("corpus", help="embedded corpus tools")
    csub = co.add_subparsers(dest="corpus_command", required=True, parser_class=_Parser)
    v = csub.add_parser("verify", help="recompute every stated property")
    v.add_argument("--skip", action="append", default=[], help="property key to skip (repeatable)")
    v.add_argument("--prefix", help="only entries whose id starts with this")
    v.set_defaults(func=cmd_corpus)

    t = sub.add_parser("tables", help="reproduce the enumeration tables")
    t.add_argument("--max-v", type=int, default=12)
    t.add_argument("--table4-max", type=int, default=TABLE4_DEFAULT_MAX)
    t.add_argument("--long", action="store_true")
    t.set_defaults(func=cmd_tables)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (ValidationFailed, MalformedToken, UnknownSymbol) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except MismatchReport as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (UsageError, PreconditionViolated, FileNotFoundError, ValueError) as exc:
        print(f"usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SymconfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
