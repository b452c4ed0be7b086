from itertools import combinations

import pytest

from symconf.blocking import blocking_profile
from symconf.core import validate
from symconf.corpus import corpus_get, corpus_load, corpus_select, corpus_verify, parse_corpus_text
from symconf.errors import MismatchReport
from symconf.isomorphism import canonical_form


@pytest.mark.parametrize("prefix,count", [
    ("bsfree25-", 23), ("chis6-", 18), ("maxmin-", 27), ("min9-19-", 7), ("min8-16-", 2),
    ("bsfree-19-", 4), ("chis5-", 2),
])
def test_group_sizes(prefix, count):
    assert len(corpus_select(prefix)) == count


def test_every_entry_validates():
    entries = corpus_load()
    assert len({e.id for e in entries}) == len(entries)
    for e in entries:
        assert validate(e.config.blocks).ok, e.id
        assert e.expect["v"] == e.config.v


def test_maxmin_entries_reach_half():
    for e in corpus_select("maxmin-"):
        assert e.expect["min_blocking"] == e.config.v // 2


def test_listed_25_systems_distinct():
    xs = [e.config for e in corpus_select("bsfree25-")] + [corpus_get("bsfree-25-2conn").config]
    forms = [canonical_form(x).text for x in xs]
    assert len(set(forms)) == len(forms)


def test_two_16_systems_distinct():
    a, b = (e.config for e in corpus_select("min8-16-"))
    assert canonical_form(a) != canonical_form(b)


def test_verify_all_zero_mismatches():
    report = corpus_verify()
    assert report.ok, report.mismatches
    assert report.checked >= 200


def test_verify_reports_mismatch():
    text = "# id: broken\n# expect: v=7 chi_s=6\n013 026 045 124 156 235 346\n"
    entries = parse_corpus_text(text)
    report = corpus_verify(entries)
    assert report.mismatches == [("broken", "chi_s", 6, 7)]
    with pytest.raises(MismatchReport):
        corpus_verify(entries, raise_on_mismatch=True)


def test_parse_continuation_and_skip():
    text = "# id: x\n# source: test\n# expect: v=7 bsfree=true\n013 026 045 \\\n124 156 235 346\n"
    (e,) = parse_corpus_text(text)
    assert e.source == "test" and e.expect == {"v": 7, "bsfree": True}
    assert e.config.v == 7
    assert corpus_verify([e], skip=("bsfree",)).checked == 1


def test_large_bsfree_entries():
    for i in ("bsfree-29", "bsfree-30", "bsfree-32"):
        assert not blocking_profile(corpus_get(i).config).has


def test_unknown_id():
    with pytest.raises(KeyError):
        corpus_get("nope")


def test_pairwise_non_isomorphic_19():
    xs = [e.config for e in corpus_select("min9-19-")]
    for a, b in combinations(xs, 2):
        assert canonical_form(a) != canonical_form(b)
