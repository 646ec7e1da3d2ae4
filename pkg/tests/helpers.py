"""Shared helpers for the test suite."""

from fractions import Fraction

from czswap.group import NormalForm, PairSet, Permutation
from czswap.ring import RingScalar


def rand_nf(rng, k):
    images = list(range(k))
    rng.shuffle(images)
    pairs = [
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if rng.random() < 0.5
    ]
    return NormalForm(PairSet.of(k, pairs), Permutation(k, tuple(images)))


def rand_rational(rng) -> Fraction:
    return Fraction(rng.randint(1, 97), rng.randint(1, 97))


def rand_pairs(rng, k):
    """Random positive-rational parameter pairs, one per qubit."""
    return tuple(
        (RingScalar(rand_rational(rng)), RingScalar(rand_rational(rng)))
        for _ in range(k)
    )
