"""The frozen identity corpus evaluates cleanly and stays well-formed."""

from confal.corpus import CASES, run_corpus


def test_case_tags_are_unique_and_descriptive():
    tags = [entry["tag"] for entry in CASES]
    assert len(tags) == len(set(tags))
    assert all(tag == tag.lower() and " " not in tag for tag in tags)


def test_every_case_yields_checks_at_small_size():
    report = run_corpus(k=2, max_exp=2, levels=(0, 1))
    assert report["ok"]
    by_tag = {row["tag"]: row for row in report["cases"]}
    assert len(by_tag) == len(CASES)
    assert all(row["checked"] > 0 for row in report["cases"])
    assert all(not row["failures"] for row in report["cases"])


def test_corrected_flags_are_present_on_both_sides():
    flags = {entry["corrected"] for entry in CASES}
    assert flags == {True, False}


def test_totals_accumulate():
    report = run_corpus(k=1, max_exp=1, levels=(0,))
    assert report["checked"] == sum(row["checked"] for row in report["cases"])
