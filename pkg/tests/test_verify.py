"""Unit tests for the verification suites and frozen fixtures."""
import pytest

from treechild import CheckResult, GOLDEN_TC, run_suite


def test_golden_fixture_spot_values():
    assert GOLDEN_TC[2][8][7] == 8485564550400
    assert GOLDEN_TC[3][7][6] == 560319972030000
    assert GOLDEN_TC[6][5][4] == 483098464854720
    assert GOLDEN_TC[4][2] == [1, 2]


def test_golden_fixture_row_lengths():
    for d, table in GOLDEN_TC.items():
        for n, row in table.items():
            assert len(row) == n, (d, n)


def test_every_suite_passes_at_reduced_size():
    for name in ("golden-tables", "cross-method", "oracle", "inequalities",
                 "sackin"):
        results = run_suite(name, n_max=5)
        assert results, name
        for r in results:
            assert isinstance(r, CheckResult)
            assert r.passed, (name, r)


def test_suite_dimension_filter():
    results = run_suite("golden-tables", d=3)
    assert len(results) == 1
    assert "d=3" in results[0].name


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("made-up")
