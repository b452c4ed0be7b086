import io
import json
import subprocess
import sys

import pytest

from symconf.cli import (EXIT_BOUND, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION,
                         main)
from symconf.corpus import corpus_get
from symconf.isomorphism import are_isomorphic
from symconf.core import parse_config

FANO = "013 026 045 124 156 235 346"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def fano_file(tmp_path):
    p = tmp_path / "fano.txt"
    p.write_text("# the Fano plane\n" + FANO + "\n")
    return str(p)


def test_analyze_fano(fano_file):
    code, text = run("analyze", fano_file)
    assert code == EXIT_OK
    (rep,) = json.loads(text)
    assert rep["valid"] and rep["v"] == 7
    assert rep["chi_w"] == 3 and rep["chi_s"] == 7
    assert rep["det_extremal"] == {"extremal": True, "det": rep["det_extremal"]["det"], "per": 24}
    assert abs(rep["det_extremal"]["det"]) == 24
    assert rep["symmetry"]["flag_transitive"]
    assert rep["levi_hamiltonian"] is True
    assert rep["blocking"]["has"] is False


def test_analyze_invalid(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("012 013 023 123\n")
    code, text = run("analyze", str(p))
    assert code == EXIT_VALIDATION
    (rep,) = json.loads(text)
    assert rep["valid"] is False and rep["violations"]


def test_analyze_missing_file():
    assert run("analyze", "/nonexistent/file")[0] == EXIT_USAGE


def test_usage_errors():
    assert run("frobnicate")[0] == EXIT_USAGE
    assert run("construct", "cyclic")[0] == EXIT_USAGE
    assert run("construct", "triangle", "x")[0] == EXIT_USAGE


@pytest.mark.parametrize("argv,v", [
    (["cyclic", "10"], 10),
    (["cyclic", "19", "--base", "0,1,8"], 19),
    (["martinetti", "13"], 13),
    (["triangle", "4"], 12),
    (["minblocking", "11"], 11),
    (["nearmin", "20", "--offset", "2"], 20),
    (["stitch2", "fano", "fano"], 13),
    (["stitch3", "fano", "fano", "bsfree-13"], 27),
    (["chis4", "13"], 13),
    (["chis5", "20"], 20),
    (["chis6", "15"], 15),
    (["col3iso", "4"], 12),
    (["delgraph", "k33"], 9),
    (["delgraph", "gamma:5"], 15),
])
def test_construct_families(argv, v):
    code, text = run("construct", *argv)
    assert code == EXIT_OK
    assert parse_config(text.splitlines()[0]).v == v


def test_construct_stitch3_is_21():
    code, text = run("construct", "stitch3", "fano", "fano", "fano", "--canonical")
    assert code == EXIT_OK
    assert are_isomorphic(parse_config(text), corpus_get("bsfree-21").config)


def test_construct_colouring_line():
    code, text = run("construct", "col3iso", "3", "--colouring")
    assert code == EXIT_OK and text.splitlines()[1].startswith("# colouring")


def test_construct_decimal_format():
    code, text = run("construct", "cyclic", "40", "--format", "decimal")
    assert code == EXIT_OK and "," in text
    assert run("construct", "cyclic", "40", "--format", "compact")[0] != EXIT_OK


def test_construct_out_of_range():
    assert run("construct", "nearmin", "13", "--offset", "2")[0] == EXIT_USAGE


def test_enumerate_lists_and_counts():
    code, text = run("enumerate", "9", "--connected")
    assert code == EXIT_OK and len(text.splitlines()) == 3
    code, text = run("enumerate", "11", "--counts")
    row = json.loads(text)
    assert row["a"] == 31 and row["chi_s"] == {"4": 21, "5": 9, "6": 1}


def test_enumerate_bound():
    assert run("enumerate", "15")[0] == EXIT_BOUND
    assert run("tables", "--max-v", "14")[0] == EXIT_BOUND


def test_tables_small():
    code, text = run("tables", "--max-v", "10", "--table4-max", "19")
    assert code == EXIT_OK
    t = json.loads(text)
    assert [r["connected"] for r in t["table1"]] == [1, 1, 3, 10]
    assert t["table1"][0]["min_blocking"] == {"none": 1}
    assert [r["configurations"] for r in t["table4"]] == [1, 1, 4]
    assert [r["self_dual"] for r in t["table4"]] == [1, 1, 2]


def test_canon_and_isomorphic(fano_file):
    code, text = run("canon", fano_file)
    (row,) = json.loads(text)
    assert code == EXIT_OK and len(row["digest"]) == 64
    assert run("isomorphic", "fano", "cyclic:7") == (EXIT_OK, "true\n")
    assert run("isomorphic", "fano", FANO) == (EXIT_OK, "true\n")
    assert run("isomorphic", "bsfree-13", "cyclic:13") == (EXIT_OK, "false\n")


def test_corpus_verify():
    code, text = run("corpus", "verify", "--prefix", "chis5")
    assert code == EXIT_OK and json.loads(text)["ok"]


def test_corpus_mismatch(monkeypatch):
    from symconf.corpus import CorpusEntry
    import symconf.corpus as corpus
    fake = CorpusEntry("fake", "", FANO, {"v": 7, "chi_s": 5})
    monkeypatch.setattr(corpus, "corpus_select", lambda prefix: [fake])
    code, text = run("corpus", "verify", "--prefix", "fake")
    assert code == EXIT_MISMATCH
    assert json.loads(text)["mismatches"][0]["actual"] == 7


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "symconf", "isomorphic", "fano", "cyclic:7"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "true"
