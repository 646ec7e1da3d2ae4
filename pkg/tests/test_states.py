import random
from fractions import Fraction

import pytest

from czswap.group import PairSet, Permutation
from czswap.ring import ONE, ZERO, RingScalar
from czswap.states import (
    ParamSpec,
    PureState,
    g_abcd_state,
    ghz_circuit,
    named_state,
    phi_state,
    phi_state_symbolic,
    random_params,
    run_on_zero_state,
)
from helpers import rand_pairs


def test_param_spec_rejects_zero_pair():
    with pytest.raises(ValueError):
        ParamSpec(((ZERO, ZERO), (ONE, ONE)))


def test_phi_state_trivial():
    e = PairSet.empty(3)
    params = ParamSpec(((ONE, ZERO),) * 3)
    s = phi_state(e, params)
    assert s.amps[0] == ONE
    assert all(a.is_zero() for a in s.amps[1:])


def test_phi_state_star_signs():
    # E = {{0,1},{0,2}} with all pairs (1,1): amplitude sign (-1)^(i0(i1+i2))
    e = PairSet.of(3, [(0, 1), (0, 2)])
    params = ParamSpec(((ONE, ONE),) * 3)
    s = phi_state(e, params)
    for n in range(8):
        i0, i1, i2 = n & 1, (n >> 1) & 1, (n >> 2) & 1
        expected = RingScalar(-1 if (i0 * (i1 + i2)) % 2 else 1)
        assert s.amps[n] == expected


def test_phi_state_norm_is_product_of_pair_norms():
    rng = random.Random(7)
    for _ in range(20):
        k = rng.choice([3, 4, 5])
        pairs = [
            (i, j)
            for i in range(k)
            for j in range(i + 1, k)
            if rng.random() < 0.5
        ]
        e = PairSet.of(k, pairs)
        params = ParamSpec(rand_pairs(rng, k))
        s = phi_state(e, params)
        expected = ONE
        for p0, p1 in params.pairs:
            expected = expected * (p0.abs2() + p1.abs2())
        assert s.norm_squared() == expected


def test_phi_state_symbolic_matches_numeric():
    rng = random.Random(11)
    e = PairSet.of(3, [(0, 1), (1, 2)])
    sym = phi_state_symbolic(e)
    params = ParamSpec(rand_pairs(rng, 3))
    s = phi_state(e, params)
    for n in range(8):
        assert sym[n].evaluate(params.pairs) == s.amps[n]


def test_named_ghz():
    s = named_state("GHZ", 3)
    assert s.backend == "exact"
    inv = RingScalar.inv_sqrt2_pow(1)
    assert s.amps[0] == inv and s.amps[7] == inv
    assert s.norm_squared() == ONE


def test_named_w_exact_when_power_of_two():
    s = named_state("W", 2)
    assert s.backend == "exact"
    assert s.amps[1] == RingScalar.inv_sqrt2_pow(1)
    assert s.amps[2] == RingScalar.inv_sqrt2_pow(1)
    s4 = named_state("W", 4)
    assert s4.backend == "exact"
    assert s4.norm_squared() == ONE


def test_named_w_float_with_exact_companion():
    s = named_state("W", 3)
    assert s.backend == "float"
    assert s.exact_unnorm is not None
    assert [a for a in s.exact_unnorm] == [
        ZERO, ONE, ONE, ZERO, ONE, ZERO, ZERO, ZERO
    ]
    assert abs(s.norm_squared() - 1) < 1e-12


def test_ghz_circuit_gate_count():
    c = ghz_circuit(2)
    assert len(c) == 4
    c5 = ghz_circuit(5)
    assert c5.gate_count("h") == 9 and c5.gate_count("cz") == 4


def test_ghz_circuit_produces_ghz_exactly():
    for k in range(2, 7):
        out = run_on_zero_state(ghz_circuit(k))
        assert out.amps == named_state("GHZ", k).amps


def test_g_abcd_state():
    g = g_abcd_state(1, 2, 3, 4)
    assert g.amps[0b0000] == RingScalar(Fraction(5, 2))
    assert g.amps[0b0011] == RingScalar(Fraction(-3, 2))
    assert g.amps[0b0101] == RingScalar(Fraction(5, 2))
    assert g.amps[0b0110] == RingScalar(Fraction(-1, 2))
    assert g.amps[0b0001] == ZERO


def test_permute_qubits():
    s = PureState.exact(2, [1, 2, 3, 4])
    swapped = s.permute_qubits(Permutation.transposition(2, 0, 1))
    assert [a.ra for a in swapped.amps] == [1, 3, 2, 4]


def test_random_params_deterministic_and_in_range():
    p1 = random_params(4, 99)
    p2 = random_params(4, 99)
    assert p1 == p2
    for p0, _p1 in p1.pairs:
        f = p0.as_fraction()
        assert f is not None and 1 <= f.numerator and f.denominator <= 97


def test_phi_state_matches_circuit_simulation():
    # dual route: Z_E on |+...+> built by gates equals phi_state with (1,1)
    # parameter pairs, up to the 2^(k/2) normalization
    import random as _random
    from czswap.circuit import Circuit, cz, h
    from czswap.ring import RingScalar

    rng = _random.Random(404)
    for k in (3, 4, 5):
        pairs = [
            (i, j)
            for i in range(k)
            for j in range(i + 1, k)
            if rng.random() < 0.5
        ]
        e = PairSet.of(k, pairs)
        gates = [h(q) for q in range(k)]
        gates.extend(cz(i, j) for i, j in sorted(e.pairs))
        circuit_state = run_on_zero_state(Circuit(k, tuple(gates)))
        plain = phi_state(e, ParamSpec(((ONE, ONE),) * k))
        scale = RingScalar.inv_sqrt2_pow(k)
        assert tuple(a * scale for a in plain.amps) == circuit_state.amps
