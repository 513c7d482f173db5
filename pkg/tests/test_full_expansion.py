import random
from fractions import Fraction as F

import pytest

from parfrac import (
    QQ,
    ExtensionField,
    FactoredDenominator,
    NotCoprimeError,
    Polynomial,
    PrimeField,
    full_pfd,
    pfd_split,
    verify_full,
)
from parfrac.full_expansion import (
    RootGroup,
    evaluate_numeric,
    evaluate_rational_numeric,
    full_frac_at_prime,
    lift,
    refactor_check,
)
from parfrac.generators import random_poly
from parfrac.polynomial import shift

from cases import DISPUTED_H1_ALPHA, FULL_DEN, FULL_H, FULL_N, PA, PB, T, poly


@pytest.fixture(scope="module")
def worked():
    return full_pfd(FULL_N, FULL_DEN)


def _h(group, j):
    return group.field.to_str(group.h(j))


def test_worked_example_values(worked):
    ga, gb = worked.groups
    assert (ga.generator, gb.generator) == ("a", "b")
    assert _h(ga, 2) == FULL_H["a"][2]
    assert _h(ga, 1) == FULL_H["a"][1]
    assert _h(gb, 1) == FULL_H["b"][1]
    assert worked.poly_part.is_zero()


def test_disputed_value_fails_oracles(worked):
    ga = worked.groups[0]
    L = ga.field
    bad = RootGroup(ga.prime, "a", L, ga.root, ((2, ga.h(2)), (1, L.convert(DISPUTED_H1_ALPHA))))
    assert not refactor_check(bad, FULL_N, FULL_DEN)
    from parfrac.full_expansion import FullExpansion

    tampered = FullExpansion(worked.poly_part, (bad, worked.groups[1]))
    assert not verify_full(tampered, FULL_N, FULL_DEN)
    x = 0.37
    want = evaluate_rational_numeric(FULL_N, FULL_DEN.polynomial(), x)
    assert abs(evaluate_numeric(tampered, x) - want) > 1e-6 * abs(want)


def test_refactor_check_both_primes(worked):
    assert all(refactor_check(g, FULL_N, FULL_DEN) for g in worked.groups)


def test_verify_full(worked):
    assert verify_full(worked, FULL_N, FULL_DEN)


def test_numeric_recombination(worked):
    rng = random.Random(41)
    D = FULL_DEN.polynomial()
    for _ in range(20):
        x = F(rng.randint(-60, 60), rng.randint(7, 13))
        want = evaluate_rational_numeric(FULL_N, D, float(x))
        got = evaluate_numeric(worked, float(x))
        assert abs(got - want) <= 1e-9 * abs(want)


def test_constant_term_and_degrees(worked):
    for g in worked.groups:
        ps = shift(lift(g.prime, g.field), g.root)
        assert g.field.is_zero(ps[0])
        assert all(len(h) <= g.prime.degree for _, h in g.terms)


def test_generator_names():
    e = full_pfd(FULL_N, FULL_DEN, generators=["x", "y"])
    assert e.groups[0].field.to_str(e.groups[0].h(2)) == "x/15"


def test_linear_prime_matches_split():
    rng = random.Random(42)
    for _ in range(20):
        a = QQ.random(rng, 9)
        m = rng.randint(1, 5)
        other = poly(1, 0, 1)
        den = FactoredDenominator([(Polynomial.linear(a), m), (other, 1)])
        N = random_poly(QQ, rng.randint(-1, m + 1), rng)
        if N.is_zero():
            continue
        g = full_frac_at_prime(N, den, 0)
        assert g.field == QQ
        from parfrac import pfd_general

        expected = pfd_general(N, den).numerators_at(Polynomial.linear(a))
        assert {j: h for j, h in g.terms} == {j: A[0] for j, A in expected.items()}


def test_all_linear_equals_pfd_split():
    from parfrac import SplitDenominator

    den = SplitDenominator([(-1, 2), (1, 3), (2, 5)], None, QQ)
    e = full_pfd(T, den.to_factored())
    s = pfd_split(T, den)
    for g in e.groups:
        want = s.numerators_at(Polynomial.linear(g.root))
        assert dict(g.terms) == {j: A[0] for j, A in want.items()}


def test_mixed_degrees_and_improper():
    cubic = poly(-2, 0, 0, 1)
    den = FactoredDenominator([(cubic, 2), (PB, 1), (poly(-3, 1), 2)])
    N = random_poly(QQ, 12, random.Random(43))
    e = full_pfd(N, den, parallel=True)
    assert verify_full(e, N, den)
    assert not e.poly_part.is_zero()
    assert refactor_check(e.groups[1], N, den)


def test_over_prime_field():
    K = PrimeField(101)
    p = Polynomial([-2, 0, 1], K)
    den = FactoredDenominator([(p, 3), (Polynomial([1, 1], K), 1)])
    N = Polynomial([1, 2, 3], K)
    e = full_pfd(N, den)
    assert verify_full(e, N, den)
    assert refactor_check(e.groups[0], N, den)


def test_non_squarefree_prime_rejected():
    den = FactoredDenominator([(poly(1, 2, 1), 1)])
    with pytest.raises(NotCoprimeError):
        full_pfd(poly(1), den)


def test_zero_numerator():
    e = full_pfd(Polynomial.zero(), FULL_DEN)
    assert all(g.terms == () for g in e.groups)
    assert verify_full(e, Polynomial.zero(), FULL_DEN)
