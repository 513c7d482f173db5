import io

import pytest

from parfrac.bench import (
    ALGORITHMS,
    CSV_COLUMNS,
    fit_slopes,
    loglog_slope,
    mean_metric,
    run_bench,
    write_csv,
)


@pytest.fixture(scope="module")
def records():
    return run_bench([8, 16, 32], trials=2, seed=3, prime=1000003)


def test_record_count(records):
    assert len(records) == 3 * 2 * len(ALGORITHMS)
    assert all(r.field_muls > 0 and r.wall_ns > 0 for r in records)


def test_counts_monotone_and_deterministic(records):
    for alg in ALGORITHMS:
        means = [mean_metric(records, alg, M, "field_muls") for M in (8, 16, 32)]
        assert means == sorted(means)
    again = run_bench([8], trials=1, seed=3, prime=1000003)
    first = [r.field_muls for r in records if r.M == 8 and r.trial == 0]
    assert [r.field_muls for r in again] == first


def test_classical_grows_faster(records):
    s = fit_slopes(records)
    assert s["classical"] > s["fast_split"]


def test_loglog_slope():
    assert loglog_slope([1, 2, 4, 8], [3, 12, 48, 192]) == pytest.approx(2.0)


def test_csv(records):
    buf = io.StringIO()
    write_csv(records, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == len(records) + 1
