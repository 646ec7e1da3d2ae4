import random

import pytest

from czswap.circuit import Circuit, Topology, cz, h, swap
from czswap.group import NormalForm, PairSet, Permutation
from czswap.optimize import (
    UnsupportedGateError,
    bfs_minimize,
    circuit_to_word,
    dehn_reduce,
    heuristic_line_reduce,
    normalize,
    rothe_reduced_word,
    synthesize_complete,
    word_to_circuit,
)
from czswap.simulate import enumerate_group, signed_perm_of
from czswap.words import GeneratorWord, RelationSet
from helpers import rand_nf


def rand_zs_circuit(rng, k, length):
    gates = []
    for _ in range(length):
        i, j = rng.sample(range(k), 2)
        gates.append(cz(i, j) if rng.random() < 0.5 else swap(i, j))
    return Circuit(k, tuple(gates))


# -- normalize ---------------------------------------------------------------


def test_normalize_empty():
    assert normalize(Circuit(3, ())).is_identity()


def test_normalize_rejects_h_x():
    with pytest.raises(UnsupportedGateError):
        normalize(Circuit(2, (h(0),)))


def test_normalize_golden_example():
    # Operator S0 Z12 Z01 S1 Z02 Z01 S1, i.e. the reversed gate list below,
    # must normalize to E = {{0,2},{1,2}}, sigma = (0,1).
    gates = (swap(1, 2), cz(0, 1), cz(0, 2), swap(1, 2), cz(0, 1), cz(1, 2), swap(0, 1))
    nf = normalize(Circuit(3, gates))
    assert nf.phase == PairSet.of(3, [(0, 2), (1, 2)])
    assert nf.perm == Permutation.from_cycles(3, (0, 1))


def test_normalize_agrees_with_signed_perm_on_random_circuits():
    rng = random.Random(61)
    for _ in range(200):
        k = rng.randint(3, 5)
        c = rand_zs_circuit(rng, k, rng.randint(0, 12))
        # letter-by-letter signed-permutation product as an oracle
        sp = signed_perm_of(NormalForm.identity(k))
        for g in c.gates:
            nf = NormalForm.z(k, *g.qubits) if g.name == "cz" else NormalForm.s(k, *g.qubits)
            sp = signed_perm_of(nf).compose(sp)
        assert signed_perm_of(normalize(c)) == sp


# -- synthesize_complete ------------------------------------------------------


def test_synthesize_identity():
    assert synthesize_complete(NormalForm.identity(4)).gates == ()


def test_synthesize_golden_example():
    nf = NormalForm(PairSet.of(3, [(0, 2), (1, 2)]), Permutation.from_cycles(3, (0, 1)))
    c = synthesize_complete(nf)
    assert c.gates == (cz(0, 2), cz(1, 2), swap(0, 1))


def test_synthesize_swap_count_from_cycles():
    sigma = Permutation.from_cycles(5, (0, 3), (2, 4))
    nf = NormalForm(PairSet.empty(5), sigma)
    c = synthesize_complete(nf)
    assert c.gate_count("swap") == 2 and c.gate_count("cz") == 0
    assert normalize(c) == nf


def test_normalize_synthesize_round_trip():
    rng = random.Random(67)
    for _ in range(300):
        k = rng.randint(2, 5)
        nf = rand_nf(rng, k)
        c = synthesize_complete(nf)
        assert normalize(c) == nf
        assert c.gate_count("cz") == len(nf.phase)
        assert c.gate_count("swap") == sum(len(cyc) - 1 for cyc in nf.perm.cycles())


# -- rothe_reduced_word -------------------------------------------------------


def test_rothe_identity():
    assert len(rothe_reduced_word(Permutation.identity(5))) == 0


def test_rothe_golden_example():
    sigma = Permutation.from_cycles(5, (0, 3), (2, 4))
    w = rothe_reduced_word(sigma)
    assert w.tokens() == "s2 s1 s0 s1 s3 s2"
    assert w.evaluate() == NormalForm(PairSet.empty(5), sigma)


def test_rothe_length_is_inversion_count():
    rng = random.Random(71)
    for _ in range(300):
        k = rng.randint(2, 8)
        images = list(range(k))
        rng.shuffle(images)
        sigma = Permutation(k, tuple(images))
        w = rothe_reduced_word(sigma)
        assert len(w) == sigma.inversions()
        assert w.evaluate() == NormalForm(PairSet.empty(k), sigma)


# -- dehn_reduce ---------------------------------------------------------------


def test_dehn_golden_reduction_to_s1():
    w = GeneratorWord.from_tokens(5, "z0 z3 s1 s0 z1 z3 s0")
    out = dehn_reduce(w)
    assert out.tokens() == "s1"
    assert out.evaluate() == w.evaluate()


def test_dehn_empty_word():
    w = GeneratorWord(5, ())
    assert dehn_reduce(w) == w


def test_dehn_fixpoint_golden():
    w = GeneratorWord.from_tokens(5, "s3 s2 z1 s2 s3 s2 z1 s2")
    out = dehn_reduce(w)
    assert out == w


def test_dehn_never_lengthens_and_preserves_element():
    rng = random.Random(73)
    rels = {k: RelationSet.line_presentation(k) for k in (3, 4)}
    for _ in range(150):
        k = rng.choice([3, 4])
        letters = []
        for _ in range(rng.randint(0, 14)):
            kind = rng.choice(["z", "s"])
            i = rng.randrange(k - 1)
            letters.append((kind, i, i + 1))
        w = GeneratorWord(k, tuple(letters))
        out = dehn_reduce(w, rels[k])
        assert len(out) <= len(w)
        assert out.evaluate() == w.evaluate()


# -- heuristic_line_reduce ------------------------------------------------------


def test_heuristic_golden_length_six():
    w = GeneratorWord.from_tokens(5, "s3 s2 z1 s2 s3 s2 z1 s2")
    out = heuristic_line_reduce(w, budget=4000)
    assert len(out) == 6
    assert out.evaluate() == w.evaluate()


def test_heuristic_already_minimal_unchanged():
    w = GeneratorWord.from_tokens(4, "z0 s1")
    assert heuristic_line_reduce(w, budget=500) == w


def test_heuristic_never_beats_bfs_and_often_matches():
    rng = random.Random(79)
    k = 4
    enum = enumerate_group(k, Topology.LINE)
    matches = 0
    total = 100
    for _ in range(total):
        letters = []
        for _ in range(rng.randint(0, 10)):
            kind = rng.choice(["z", "s"])
            i = rng.randrange(k - 1)
            letters.append((kind, i, i + 1))
        w = GeneratorWord(k, tuple(letters))
        out = heuristic_line_reduce(w, budget=2000)
        assert out.evaluate() == w.evaluate()
        assert len(out) <= len(w)
        minimal = enum.distance(w.evaluate())
        assert len(out) >= minimal
        matches += len(out) == minimal
    print(f"heuristic equals the BFS minimum on {matches}/{total} random words")
    # the heuristic is not exact, but should match the oracle frequently
    assert matches >= total * 2 // 3


# -- bfs_minimize ----------------------------------------------------------------


def test_bfs_identity_empty_word():
    assert len(bfs_minimize(NormalForm.identity(4), Topology.LINE)) == 0


def test_bfs_matches_rothe_for_pure_permutations():
    # reduced words are geodesics: the line-topology distance of a pure
    # permutation equals its inversion count
    rng = random.Random(83)
    for _ in range(20):
        k = rng.randint(3, 4)
        images = list(range(k))
        rng.shuffle(images)
        sigma = Permutation(k, tuple(images))
        nf = NormalForm(PairSet.empty(k), sigma)
        w = bfs_minimize(nf, Topology.LINE)
        assert len(w) == sigma.inversions()
        assert w.evaluate() == nf


def test_bfs_minimize_complete_alphabet():
    nf = NormalForm(PairSet.of(3, [(0, 2)]), Permutation.identity(3))
    w = bfs_minimize(nf, Topology.COMPLETE)
    assert len(w) == 1
    assert w.evaluate() == nf


def test_word_circuit_round_trip():
    w = GeneratorWord.from_tokens(4, "s0 z1 s2 z0")
    c = word_to_circuit(w)
    assert circuit_to_word(c) == w
    assert normalize(c) == w.evaluate()
