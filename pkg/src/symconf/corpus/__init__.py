"""Embedded configurations with their expected properties.

Data files live in ``data/``.  Each entry is a header followed by a block
list (long lists continue over lines ending in a backslash)::

    # id: fano
    # source: short description
    # expect: v=7 bsfree=true chi_s=7
    013 026 045 124 156 235 346
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from ..core import Configuration, iter_config_texts, parse_config
from ..errors import MismatchReport


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    source: str
    text: str
    expect: dict = field(default_factory=dict)
    file: str = ""

    @property
    def config(self) -> Configuration:
        return parse_config(self.text)


def _convert(value: str):
    if value in ("true", "false"):
        return value == "true"
    try:
        return int(value)
    except ValueError:
        return value


def parse_corpus_text(text: str, file: str = ""):
    entries = []
    header = {}
    body = []

    def flush():
        if header:
            block_text = " ".join(iter_config_texts("\n".join(body)))
            expect = {}
            for item in header.get("expect", "").split():
                key, _, value = item.partition("=")
                expect[key] = _convert(value)
            entries.append(CorpusEntry(header["id"], header.get("source", ""),
                                       block_text, expect, file))

    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("# id:"):
            flush()
            header = {"id": stripped[5:].strip()}
            body = []
        elif stripped.startswith("#") and header and not body:
            key, _, value = stripped[1:].partition(":")
            header[key.strip()] = value.strip()
        elif stripped and not stripped.startswith("#") and header:
            body.append(line)
    flush()
    return entries


@lru_cache(maxsize=1)
def _load():
    out = []
    data = resources.files(__package__) / "data"
    for path in sorted(data.iterdir(), key=lambda p: p.name):
        if path.name.endswith(".txt"):
            out.extend(parse_corpus_text(path.read_text(), path.name))
    return tuple(out)


def corpus_load():
    """All corpus entries, in file order."""
    return list(_load())


def corpus_get(entry_id: str) -> CorpusEntry:
    for e in _load():
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


def corpus_select(prefix: str):
    return [e for e in _load() if e.id.startswith(prefix)]


# -- verification ------------------------------------------------------------

def _compute(x: Configuration, key: str, cache: dict):
    from ..blocking import blocking_profile
    from ..colouring import strong_chromatic_number
    from ..core import levi_graph
    from ..graphs import config_connectivity, is_hamiltonian
    from ..isomorphism import symmetry_profile

    if key == "v":
        return x.v
    if key in ("bsfree", "min_blocking", "chi_w"):
        if "bp" not in cache:
            cache["bp"] = blocking_profile(x, verify_sizes=False)
        bp = cache["bp"]
        return {"bsfree": not bp.has, "min_blocking": bp.min_size, "chi_w": bp.chi_w}[key]
    if key == "chi_s":
        return strong_chromatic_number(x)[0]
    if key == "connectivity":
        return config_connectivity(x)
    if key == "levi_hamiltonian":
        return is_hamiltonian(levi_graph(x)).hamiltonian
    if key in ("self_dual", "self_polar", "point_transitive", "flag_transitive",
               "weakly_flag_transitive", "cyclic", "aut_order", "full_order"):
        if "sym" not in cache:
            cache["sym"] = symmetry_profile(x)
        return getattr(cache["sym"], key)
    raise KeyError(f"unknown expectation {key!r}")


@dataclass
class VerifyReport:
    checked: int = 0
    mismatches: list = field(default_factory=list)
    details: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches


def verify_entry(entry: CorpusEntry, skip=()):
    """Recompute every expectation of ``entry``; returns a list of
    ``(id, key, expected, actual)`` rows."""
    x = entry.config
    cache = {}
    rows = []
    for key, expected in entry.expect.items():
        if key in skip:
            continue
        actual = _compute(x, key, cache)
        rows.append((entry.id, key, expected, actual))
    return rows


def corpus_verify(entries=None, skip=(), raise_on_mismatch: bool = False, jobs: int = 1) -> VerifyReport:
    entries = corpus_load() if entries is None else list(entries)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(verify_entry, entries, [tuple(skip)] * len(entries)))
    else:
        results = [verify_entry(e, skip) for e in entries]
    report = VerifyReport()
    for rows in results:
        for row in rows:
            report.checked += 1
            report.details.append(row)
            if row[2] != row[3]:
                report.mismatches.append(row)
    if raise_on_mismatch and report.mismatches:
        raise MismatchReport(report.mismatches)
    return report
