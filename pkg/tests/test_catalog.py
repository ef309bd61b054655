import pytest

from hopfsym import checkers as ck
from hopfsym.catalog import (
    catalog_entries,
    entry_by_name,
    run_entry,
    run_regression,
    Ctx,
)
from hopfsym.exactlin import QQ, Field


def test_entries_sorted_and_cited():
    entries = catalog_entries()
    names = [e.name for e in entries]
    assert names == sorted(names)
    for e in entries:
        for c in e.checks:
            assert c.citation
    for required in ("kC2_division", "h4_regular", "dualnumbers_E", "super_trivext", "ex41_smash"):
        assert required in names
    assert {"hopf_regular_kC2", "hopf_regular_kC3", "hopf_regular_H4", "hopf_regular_H4dual"} <= set(names)


def test_regression_over_q(regression_q):
    summary, _ = regression_q
    assert summary.ok, summary.text()
    assert not summary.skipped
    d = summary.as_dict()
    assert set(d["records"][0]) == {"entry", "check", "expected", "got", "citation", "witness"}


def test_regression_over_f5():
    summary = run_regression(field=Field(5))
    assert summary.ok, summary.text()


def test_regression_over_f2_skips_odd_entries():
    summary = run_regression(field=Field(2), properties=False)
    assert summary.ok, summary.text()
    skipped = {s.split(":")[0] for s in summary.skipped}
    assert {"kC2_division", "h4_regular", "dualnumbers_E", "hopf_regular_H4", "double_H4"} <= skipped
    assert "hopf_regular_kC2" not in skipped and "super_trivext" not in skipped


def test_odd_entries_refuse_f2():
    with pytest.raises(ValueError, match="characteristic"):
        entry_by_name("h4_regular").build(Field(2))


@pytest.mark.parametrize("seed", [1, 2])
def test_verdicts_independent_of_seed(regression_q, seed):
    base, _ = regression_q
    other = run_regression(seed=seed, properties=False)
    got = {(r.entry, r.check): r.got for r in other.records}
    for r in base.records:
        if (r.entry, r.check) in got:
            assert got[(r.entry, r.check)] == r.got


def test_regression_deterministic_for_fixed_seed():
    a = run_regression(seed=3, properties=False).as_dict()
    b = run_regression(seed=3, properties=False).as_dict()
    assert a == b


def test_negative_control_entry_kxk():
    recs = {r.check: r for r in run_entry(entry_by_name("super_trivext_kxk"), QQ, Ctx(ck.DEFAULT_BUDGET, 0), False)}
    assert recs["R_plain_symmetric"].got == ck.YES
    assert recs["graded_frobenius"].got == ck.NO_CERTIFIED


def test_summary_text_reports_mismatch():
    summary = run_regression(properties=False)
    summary.records[0].got = "tampered"
    assert not summary.ok
    assert "FAIL" in summary.text()
