import random
from fractions import Fraction as F

import pytest

from parfrac import (
    QQ,
    FactoredDenominator,
    NotCoprimeError,
    Polynomial,
    PrimeField,
    classical_pfd,
    pfd_general,
    pfd_split,
    ppfraction,
    recombine,
)
from parfrac.generators import random_factored_instance, random_poly, random_split_instance
from parfrac.pfd_quotient import (
    frac_wrt,
    mod_inverse,
    prime_power_tail,
    rem_product,
    split_prime_power,
)
from parfrac.polynomial import divrem, xgcd

from cases import IMPROPER_D, IMPROPER_N, P1, P2, QUOT_DEN, QUOT_N, QUOT_R2, QUOT_R2_AS_STATED, T, poly

FP = PrimeField(65537)


def test_rem_product_examples():
    assert rem_product(P2, [P1, P1]) == poly(7, 7)
    assert rem_product(P2, []) == Polynomial.one()
    assert rem_product(poly(-1, 1), [T, poly(1, 1)]) == poly(2)


def test_rem_product_matches_full_product():
    rng = random.Random(31)
    for _ in range(50):
        D1 = random_poly(FP, rng.randint(1, 6), rng)
        others = [random_poly(FP, rng.randint(0, 9), rng) for _ in range(rng.randint(0, 12))]
        full = Polynomial.one(FP)
        for f in others:
            full = full * f
        assert rem_product(D1, others) == divrem(full, D1)[1]


def test_mod_inverse_examples():
    assert mod_inverse(poly(1, 1), P2) == poly(F(1, 2), F(-1, 4))
    assert mod_inverse(Polynomial.one(), P2) == Polynomial.one()
    assert mod_inverse(T, poly(-2, 1)) == poly(F(1, 2))


def test_mod_inverse_not_coprime():
    with pytest.raises(NotCoprimeError, match="factor not coprime to modulus"):
        mod_inverse(poly(-1, 1), poly(-1, 1) * poly(1, 1))


def test_frac_wrt_worked_example():
    r = frac_wrt(QUOT_N, QUOT_DEN, 1)
    assert r == QUOT_R2
    assert r != QUOT_R2_AS_STATED


def test_frac_wrt_other_examples():
    den = FactoredDenominator([(poly(-1, 1), 1), (poly(-2, 1), 1)])
    assert frac_wrt(poly(1), den, 0) == poly(-1)
    # a constant "factor" contributes nothing
    den = FactoredDenominator([(poly(3), 1), (poly(-2, 1), 1)])
    assert len(den.factors) == 1


def test_quotient_ring_identity():
    rng = random.Random(32)
    for _ in range(60):
        N, den = random_factored_instance(QQ, rng, max_degree=14)
        for i in range(len(den.factors)):
            Di = den.prime_power(i)
            rest = Polynomial.one()
            for j in range(len(den.factors)):
                if j != i:
                    rest = rest * den.prime_power(j)
            r = frac_wrt(N, den, i)
            lhs = divrem(r * rest.scale(den.unit), Di)[1]
            assert lhs == divrem(N, Di)[1]


def test_split_prime_power_examples():
    q = poly(-1, 1)
    r, s = poly(-1), poly(1)
    c, d = split_prime_power(T, q, 1, 1, r, s)
    assert (c, d) == ([r], [s])
    c, d = split_prime_power(T, q, 2, 1, r, s)
    assert c == [poly(-1), poly(-1)] and d == [poly(1)]
    c, d = split_prime_power(T, q, 1, 2, r, s)
    assert c == [poly(1)] and d == [poly(1), poly(-1)]


def test_split_prime_power_checks_bezout():
    with pytest.raises(ValueError):
        split_prime_power(T, poly(-1, 1), 1, 1, poly(1), poly(1))


def _assemble(p, q, m, n, c, d):
    # p^m q^n * (sum c_i/p^(m-i) + sum d_j/q^(n-j))
    out = Polynomial.zero(p.field)
    for i, ci in enumerate(c):
        out = out + ci * p ** i * q ** n
    for j, dj in enumerate(d):
        out = out + dj * q ** j * p ** m
    return out


def test_split_prime_power_recombines():
    rng = random.Random(33)
    done = 0
    while done < 50:
        p = random_poly(QQ, rng.randint(1, 3), rng)
        q = random_poly(QQ, rng.randint(1, 3), rng)
        g, u, v = xgcd(q, p)
        if g.degree != 0:
            continue
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        c, d = split_prime_power(p, q, m, n, u, v)
        assert _assemble(p, q, m, n, c, d) == Polynomial.one()
        done += 1


def test_prime_power_tail_examples():
    r = poly(1, 3)
    assert prime_power_tail(r, poly(-1, 0, 1), 1) == [r]
    assert prime_power_tail(r, poly(0, 0, 1), 2) == [Polynomial.zero(), r]
    assert prime_power_tail(poly(1, 0, 1), poly(-1, 1), 3) == [poly(1), poly(2), poly(2)]
    with pytest.raises(ValueError):
        prime_power_tail(poly(0, 0, 0, 1), poly(-1, 1), 3)


def test_prime_power_tail_reconstructs():
    rng = random.Random(34)
    for _ in range(100):
        p = random_poly(QQ, rng.randint(1, 4), rng)
        a = rng.randint(1, 5)
        r = random_poly(QQ, rng.randint(-1, a * p.degree - 1), rng)
        digits = prime_power_tail(r, p, a)
        assert all(A.degree < p.degree for A in digits)
        back = Polynomial.zero()
        for j, A in enumerate(digits, start=1):
            back = back + A * p ** (a - j)
        assert back == r


def test_pfd_general_worked_examples():
    e = pfd_general(QUOT_N, QUOT_DEN)
    assert e.numerators_at(P2) == {1: QUOT_R2}
    e = pfd_general(poly(1, 1), FactoredDenominator([(P2, 1)]))
    assert e.terms[0].numerator == poly(1, 1) and e.poly_part.is_zero()
    e = pfd_general(IMPROPER_N, FactoredDenominator([(IMPROPER_D, 1)]))
    assert e.poly_part == poly(6, 1)
    assert e.terms[0].numerator == poly(-8, 19)


def test_pfd_general_coprimality_error_names_pair():
    with pytest.raises(NotCoprimeError, match="t-1 and t\\^2-1"):
        FactoredDenominator([(poly(-1, 1), 1), (poly(-1, 0, 1), 1)])


@pytest.mark.parametrize("K", [QQ, FP], ids=["QQ", "Fp"])
def test_pfd_general_recombines(K):
    rng = random.Random(35)
    for _ in range(80):
        N, den = random_factored_instance(K, rng, max_degree=18, improper=3)
        e = pfd_general(N, den)
        e.validate()
        assert recombine(e, den)[0] == N


def test_parallel_same_result():
    rng = random.Random(36)
    for _ in range(20):
        N, den = random_factored_instance(QQ, rng, max_degree=16)
        assert pfd_general(N, den, parallel=True) == pfd_general(N, den)


def test_general_agrees_with_split():
    rng = random.Random(37)
    for K in (QQ, FP):
        for _ in range(30):
            N, den = random_split_instance(K, rng, max_degree=14, improper=2)
            assert pfd_general(N, den.to_factored()).equivalent(pfd_split(N, den))


def test_ppfraction():
    e = ppfraction(QUOT_N, QUOT_DEN)
    assert [t.power for t in e.terms] == [1, 1]
    assert e.terms[0].factor == P1 ** 2
    assert recombine(e, QUOT_DEN)[0] == QUOT_N


def test_matches_classical():
    rng = random.Random(38)
    for _ in range(30):
        N, den = random_factored_instance(QQ, rng, max_degree=12)
        assert pfd_general(N, den).equivalent(classical_pfd(N, den))
