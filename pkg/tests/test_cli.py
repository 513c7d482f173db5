import csv
import io
import json
import random

import pytest

from parfrac import QQ, format_expansion, pfd_general, pfd_split
from parfrac.cli import EXIT_MATH, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from parfrac.generators import random_factored_instance, random_split_instance

QUOT = "t^2/((t^2-2*t-1)^2*(t^2-t+2))"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_decompose_text():
    code, out, _ = run("decompose", QUOT)
    assert code == EXIT_OK
    assert "(-2+3*t)/28/(t^2-t+2)" in out


def test_bare_expression_and_verify_flag():
    code, out, err = run(QUOT, "--verify")
    assert code == EXIT_OK and err.strip() == "OK"


@pytest.mark.parametrize("fmt", ["json", "latex"])
def test_formats(fmt):
    code, out, _ = run("decompose", QUOT, "--format", fmt)
    assert code == EXIT_OK
    if fmt == "json":
        assert json.loads(out)["field"] == "rational"


def test_full_mode():
    code, out, _ = run("decompose", "t/((t^2-t-1)^2*(t^2-t+2))", "--mode", "full", "--verify")
    assert code == EXIT_OK
    assert "a/15/(t-a)^2" in out


def test_prime_field_and_strategy():
    code, out, _ = run("decompose", "1/((t-1)^3*(t+2)^2)", "--field", "fp:101", "--group-strategy", "pole-series")
    assert code == EXIT_OK and "/(t+2)" in out


def _expr(N, D):
    return f"({N.to_str(descending=True)})/({D.to_str(descending=True)})"


def test_verify_fuzz(tmp_path):
    rng = random.Random(71)
    for i in range(20):
        if i % 2:
            N, den = random_factored_instance(QQ, rng, max_degree=8)
            e = pfd_general(N, den)
        else:
            N, sden = random_split_instance(QQ, rng, max_degree=8)
            den = sden.to_factored()
            e = pfd_split(N, sden)
        f = tmp_path / f"e{i}.txt"
        f.write_text(format_expansion(e, "json" if i % 3 == 0 else "text"))
        expr = _expr(N, den.polynomial())
        code, out, err = run("verify", expr, "--expansion", str(f))
        assert (code, out.strip()) == (EXIT_OK, "OK"), err


def test_verify_mismatch(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("(2-3*t)/28/(t^2-t+2) + (3+5*t)/14/(t^2-2*t-1)^2 + (5-3*t)/28/(t^2-2*t-1)")
    code, out, _ = run("verify", QUOT, "--expansion", str(f))
    assert (code, out.strip()) == (EXIT_MISMATCH, "MISMATCH")


def test_usage_errors(tmp_path):
    assert run("decompose", "1/(t-1")[0] == EXIT_USAGE
    assert run("decompose", QUOT, "--field", "complex")[0] == EXIT_USAGE
    assert run("decompose", QUOT, "--format", "xml")[0] == EXIT_USAGE
    assert run("verify", QUOT, "--expansion", str(tmp_path / "missing"))[0] == EXIT_USAGE
    code, _, err = run("decompose", "1/(t-1)^0.5")
    assert code == EXIT_USAGE and "position" in err


def test_math_errors():
    code, _, err = run("decompose", "1/((t-1)*(t^2-1))")
    assert code == EXIT_MATH and "coprime" in err
    code, _, _ = run("decompose", "1/(t^2+2*t+1)", "--mode", "full")
    assert code == EXIT_MATH


def test_bench_small(tmp_path):
    code, out, err = run("bench", "--sizes", "4,8", "--trials", "1")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["M", "algorithm", "trial", "wall_ns", "field_muls"]
    assert len(rows) == 1 + 2 * 3
    assert "slope fast_split" in err
    target = tmp_path / "b.csv"
    assert run("--bench", "--sizes", "4", "--trials", "1", "--output", str(target))[0] == EXIT_OK
    assert target.read_text().startswith("M,algorithm")
    assert run("bench", "--sizes", "0")[0] == EXIT_USAGE
