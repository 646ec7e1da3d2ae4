import math
import random
from itertools import permutations

import pytest

from czswap.group import (
    NormalForm,
    PairSet,
    Permutation,
    conjugate_pairs,
    nf_inverse,
    nf_power,
    nf_product,
)


from helpers import rand_nf


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation(3, (0, 0, 2))
    with pytest.raises(ValueError):
        PairSet.of(3, [(1, 1)])
    with pytest.raises(ValueError):
        PairSet.of(2, [(0, 2)])


def test_pairset_canonicalization():
    e = PairSet.of(4, [(2, 0), (1, 3)])
    assert (0, 2) in e and (3, 1) in e
    assert sorted(e) == [(0, 2), (1, 3)]


def test_conjugate_pairs_identity_and_transposition():
    e = PairSet.of(3, [(0, 2)])
    assert conjugate_pairs(Permutation.identity(3), e) == e
    t = Permutation.transposition(3, 0, 1)
    assert conjugate_pairs(t, e) == PairSet.of(3, [(1, 2)])


def test_conjugation_orbit_of_one_pair_is_all_pairs():
    k = 4
    e = PairSet.of(k, [(0, 1)])
    orbit = set()
    for images in permutations(range(k)):
        sigma = Permutation(k, images)
        image = conjugate_pairs(sigma, e)
        assert len(image) == 1
        orbit |= image.pairs
    assert orbit == {(i, j) for i in range(k) for j in range(i + 1, k)}


def test_conjugation_action_axiom():
    rng = random.Random(3)
    for _ in range(200):
        k = rng.choice([3, 4, 5])
        a = rand_nf(rng, k)
        b = rand_nf(rng, k)
        e = a.phase
        sigma, tau = a.perm, b.perm
        assert conjugate_pairs(sigma.compose(tau), e) == conjugate_pairs(
            sigma, conjugate_pairs(tau, e)
        )


def test_worked_product():
    # (empty,(0,1)) * ({{0,1},{1,2}},(1,2)) * ({{0,1},{0,2}},(1,2))
    #   = ({{0,2},{1,2}}, (0,1))
    k = 3
    a = NormalForm(PairSet.empty(k), Permutation.from_cycles(k, (0, 1)))
    b = NormalForm(PairSet.of(k, [(0, 1), (1, 2)]), Permutation.from_cycles(k, (1, 2)))
    c = NormalForm(PairSet.of(k, [(0, 1), (0, 2)]), Permutation.from_cycles(k, (1, 2)))
    out = nf_product(nf_product(a, b), c)
    assert out.phase == PairSet.of(k, [(0, 2), (1, 2)])
    assert out.perm == Permutation.from_cycles(k, (0, 1))


def test_identity_and_inverse():
    rng = random.Random(17)
    for _ in range(200):
        k = rng.choice([3, 4, 5])
        a = rand_nf(rng, k)
        e = NormalForm.identity(k)
        assert nf_product(e, a) == a
        assert nf_product(a, e) == a
        assert nf_product(a, nf_inverse(a)).is_identity()
        assert nf_product(nf_inverse(a), a).is_identity()
    assert nf_inverse(NormalForm.identity(3)).is_identity()


def test_pure_permutation_inverse():
    sigma = Permutation.from_cycles(4, (0, 1, 2))
    a = NormalForm(PairSet.empty(4), sigma)
    assert nf_inverse(a) == NormalForm(PairSet.empty(4), sigma.inverse())


def test_group_axioms_randomized():
    rng = random.Random(23)
    for k in (3, 4, 5):
        for _ in range(1000):
            a, b, c = (rand_nf(rng, k) for _ in range(3))
            assert nf_product(nf_product(a, b), c) == nf_product(a, nf_product(b, c))


def test_phase_elements_commute_and_are_involutions():
    rng = random.Random(29)
    for _ in range(100):
        k = rng.choice([3, 4, 5])
        a = rand_nf(rng, k)
        b = rand_nf(rng, k)
        za = NormalForm(a.phase, Permutation.identity(k))
        zb = NormalForm(b.phase, Permutation.identity(k))
        assert nf_product(za, zb) == nf_product(zb, za)
        assert nf_product(za, za).is_identity()


def test_element_order_divides_two_factorial_k():
    rng = random.Random(31)
    for k in (3, 4, 5):
        for _ in range(30):
            a = rand_nf(rng, k)
            assert nf_power(a, 2 * math.factorial(k)).is_identity()
            assert nf_power(a, 2 * a.perm.order()).is_identity()


def test_k_mismatch_errors():
    a = NormalForm.identity(3)
    b = NormalForm.identity(4)
    with pytest.raises(ValueError):
        nf_product(a, b)
    with pytest.raises(ValueError):
        conjugate_pairs(Permutation.identity(3), PairSet.empty(4))
