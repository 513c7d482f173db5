"""Random instances for tests, fuzzing and the benchmark."""

from __future__ import annotations

import random
from typing import List, Optional, Tuple

from .expansion import FactoredDenominator, SplitDenominator
from .fields import Field
from .polynomial import Polynomial, gcd


def random_poly(K: Field, degree: int, rng: random.Random, bound: int = 10) -> Polynomial:
    """Polynomial of exactly ``degree`` (the zero polynomial for ``degree < 0``)."""
    if degree < 0:
        return Polynomial.zero(K)
    c = [K.random(rng, bound) for _ in range(degree)]
    lead = K.random(rng, bound)
    while K.is_zero(lead):
        lead = K.random(rng, bound)
    return Polynomial(c + [lead], K)


def random_numerator(K: Field, below: int, rng: random.Random, improper: int = 0) -> Polynomial:
    # degree uniform in [-1, below - 1 + improper]
    return random_poly(K, rng.randint(-1, below - 1 + improper), rng)


def random_split_instance(
    K: Field,
    rng: random.Random,
    max_degree: int = 12,
    max_mult: int = 4,
    improper: int = 0,
    bound: int = 20,
) -> Tuple[Polynomial, SplitDenominator]:
    """``(N, den)`` with distinct random roots and mixed multiplicities."""
    target = rng.randint(1, max_degree)
    roots: List[Tuple[object, int]] = []
    seen = set()
    total = 0
    while total < target:
        a = K.random(rng, bound)
        key = K.sort_key(a)
        if key in seen:
            continue
        seen.add(key)
        m = min(rng.randint(1, max_mult), target - total)
        roots.append((a, m))
        total += m
    unit = K.random(rng, bound)
    while K.is_zero(unit):
        unit = K.random(rng, bound)
    den = SplitDenominator(roots, unit, K)
    return random_numerator(K, den.degree, rng, improper), den


def random_factored_instance(
    K: Field,
    rng: random.Random,
    max_degree: int = 12,
    max_mult: int = 3,
    max_factor_degree: int = 3,
    improper: int = 0,
) -> Tuple[Polynomial, FactoredDenominator]:
    """``(N, den)`` with pairwise coprime random factors of mixed degrees.

    Factors need not be irreducible; only coprimality is enforced.
    """
    target = rng.randint(1, max_degree)
    factors: List[Tuple[Polynomial, int]] = []
    total = 0
    tries = 0
    while total < target and tries < 200:
        tries += 1
        d = rng.randint(1, min(max_factor_degree, target - total))
        p = random_poly(K, d, rng).monic()
        if any(gcd(p, q).degree > 0 for q, _ in factors):
            continue
        m = rng.randint(1, max(1, min(max_mult, (target - total) // d)))
        factors.append((p, m))
        total += d * m
    unit = K.random(rng, 10)
    while K.is_zero(unit):
        unit = K.random(rng, 10)
    den = FactoredDenominator(factors, unit, K)
    return random_numerator(K, den.degree, rng, improper), den


def distinct_linear_instance(
    K: Field, M: int, rng: random.Random
) -> Tuple[Polynomial, SplitDenominator]:
    """``M`` distinct simple roots and a random numerator of degree ``M - 1``."""
    seen = set()
    roots = []
    while len(roots) < M:
        a = K.random(rng)
        if a in seen:
            continue
        seen.add(a)
        roots.append((a, 1))
    return random_poly(K, M - 1, rng), SplitDenominator(roots, None, K)


__all__ = [
    "random_poly",
    "random_numerator",
    "random_split_instance",
    "random_factored_instance",
    "distinct_linear_instance",
]
