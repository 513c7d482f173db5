import random
from fractions import Fraction as F

import pytest

from parfrac import (
    QQ,
    NotCoprimeError,
    Polynomial,
    PrimeField,
    SplitDenominator,
    classical_pfd,
    pfd_split,
    recombine,
)
from parfrac.generators import random_poly, random_split_instance
from parfrac.pfd_linear import GROUPING, POLE_SERIES, frac_at_point, frac_at_zero, polynomial_part
from parfrac.polynomial import divrem

from cases import IMPROPER_D, IMPROPER_N, SPLIT_DEN, SPLIT_N, SPLIT_NUMERATORS, poly

FP = PrimeField(65537)
STRATEGIES = [GROUPING, POLE_SERIES]


def test_frac_at_zero_examples():
    E = poly(-2, 1) ** 3 * poly(-3, 1) ** 5
    assert frac_at_zero(poly(-1, 1), E, 2) == poly(F(-1, 1944), F(-13, 11664))
    E = poly(2, 1) ** 2 * poly(-1, 1) ** 5
    assert frac_at_zero(poly(1, 1), E, 3) == poly(F(-1, 4), F(-5, 4), F(-59, 16))
    N = poly(1, 2, 3, 4, 5)
    assert frac_at_zero(N, Polynomial.one(), 3) == poly(1, 2, 3)


def test_frac_at_zero_needs_coprime():
    with pytest.raises(NotCoprimeError):
        frac_at_zero(poly(1), poly(0, 1), 2)


@pytest.mark.parametrize("strategy", STRATEGIES)
@pytest.mark.parametrize("i,root", [(0, -1), (1, 1), (2, 2)])
def test_frac_at_point_worked_example(strategy, i, root):
    got = dict(frac_at_point(SPLIT_N, SPLIT_DEN, i, strategy))
    assert got == SPLIT_NUMERATORS[root]


def test_frac_at_point_errors():
    with pytest.raises(IndexError):
        frac_at_point(SPLIT_N, SPLIT_DEN, 3)
    with pytest.raises(ValueError):
        frac_at_point(poly(0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1), SPLIT_DEN, 0)
    with pytest.raises(ValueError):
        frac_at_point(SPLIT_N, SPLIT_DEN, 0, "bogus")


def test_polynomial_part_examples():
    assert polynomial_part(IMPROPER_N, IMPROPER_D) == poly(6, 1)
    assert polynomial_part(poly(1, 1), IMPROPER_D).is_zero()
    assert polynomial_part(IMPROPER_D, IMPROPER_D) == Polynomial.one()
    with pytest.raises(ZeroDivisionError):
        polynomial_part(poly(1), Polynomial.zero())


@pytest.mark.parametrize("K", [QQ, FP], ids=["QQ", "Fp"])
def test_polynomial_part_matches_divrem(K):
    rng = random.Random(21)
    for _ in range(500):
        N = random_poly(K, rng.randint(-1, 25), rng)
        D = random_poly(K, rng.randint(0, 12), rng)
        assert polynomial_part(N, D) == divrem(N, D)[0]


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_pfd_split_worked_example(strategy):
    e = pfd_split(SPLIT_N, SPLIT_DEN, strategy=strategy)
    assert e.poly_part.is_zero()
    for root, nums in SPLIT_NUMERATORS.items():
        got = e.numerators_at(Polynomial.linear(root))
        assert {j: A[0] for j, A in got.items()} == nums
    # input root order, powers descending
    assert [(t.factor[0], t.power) for t in e.terms][:3] == [(1, 2), (1, 1), (-1, 3)]


def test_pfd_split_trivial_cases():
    den = SplitDenominator([(5, 1)], None, QQ)
    e = pfd_split(poly(1), den)
    assert len(e.terms) == 1 and e.terms[0].numerator == poly(1)
    den = SplitDenominator([(1, 1), (2, 1)], None, QQ)
    e = pfd_split(poly(1), den)
    assert {t.factor[0]: t.numerator[0] for t in e.terms} == {-1: -1, -2: 1}
    assert e.equivalent(classical_pfd(poly(1), den.to_factored()))
    assert pfd_split(Polynomial.zero(), den).terms == ()


def test_duplicate_roots_rejected():
    with pytest.raises(NotCoprimeError, match="factors not coprime"):
        SplitDenominator([(1, 1), (1, 2)], None, QQ)


def test_unit_and_polynomial_part():
    den = SplitDenominator([(0, 1), (1, 2)], 3, QQ)
    N = poly(1, 0, 0, 0, 0, 2)
    e = pfd_split(N, den)
    Nr, D = recombine(e, den.to_factored())
    assert Nr == N and D == den.polynomial()


@pytest.mark.parametrize("K", [QQ, FP], ids=["QQ", "Fp"])
@pytest.mark.parametrize("strategy", STRATEGIES)
def test_recombination_and_properness(K, strategy):
    rng = random.Random(22)
    for _ in range(60):
        N, den = random_split_instance(K, rng, max_degree=14, improper=4)
        e = pfd_split(N, den, strategy=strategy)
        assert all(t.numerator.degree < 1 for t in e.terms)
        assert recombine(e, den.to_factored())[0] == N


def test_strategies_agree_and_parallel():
    rng = random.Random(23)
    for _ in range(40):
        N, den = random_split_instance(QQ, rng, max_degree=16, max_mult=6)
        a = pfd_split(N, den, strategy=GROUPING)
        assert a == pfd_split(N, den, strategy=POLE_SERIES)
        assert a == pfd_split(N, den, parallel=True)


def test_matches_classical_small():
    rng = random.Random(24)
    for K in (QQ, FP):
        for _ in range(25):
            N, den = random_split_instance(K, rng, max_degree=12)
            assert pfd_split(N, den).equivalent(classical_pfd(N, den.to_factored()))


def test_shift_structure():
    rng = random.Random(25)
    for _ in range(30):
        N, den = random_split_instance(QQ, rng, max_degree=10)
        b = QQ.random(rng, 7)
        shifted_den = SplitDenominator([(QQ.sub(a, b), m) for a, m in den.roots], den.unit, QQ)
        lhs = pfd_split(N.shift(b), shifted_den)
        assert lhs.equivalent(pfd_split(N, den).shift(b))
