import random

import pytest

from czswap.circuit import (
    Circuit,
    CircuitSyntaxError,
    Topology,
    check_topology,
    cz,
    h,
    parse_circuit,
    serialize_circuit,
    swap,
    x,
)


def test_parse_simple():
    c = parse_circuit("qubits 2\ncz 0 1\n")
    assert c.k == 2 and c.gates == (cz(0, 1),)
    c = parse_circuit("qubits 3\nswap 1 2\nh 0\n")
    assert c.gates == (swap(1, 2), h(0))


def test_parse_comments_and_blanks():
    text = "# header comment\n\nqubits 2\n cz 0 1  # tail comment\n\n"
    c = parse_circuit(text)
    assert c.gates == (cz(0, 1),)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(CircuitSyntaxError) as err:
        parse_circuit("qubits 2\ncz 0 2\n")
    assert "line 2" in str(err.value)
    with pytest.raises(CircuitSyntaxError):
        parse_circuit("qubits 2\ncz 1 1\n")
    with pytest.raises(CircuitSyntaxError):
        parse_circuit("cz 0 1\n")
    with pytest.raises(CircuitSyntaxError):
        parse_circuit("qubits 2\nfoo 0\n")
    with pytest.raises(CircuitSyntaxError):
        parse_circuit("qubits 0\n")


def test_serialize_canonical():
    assert serialize_circuit(Circuit(3, ())) == "qubits 3\n"
    c = Circuit(2, (cz(1, 0),))
    assert serialize_circuit(c) == "qubits 2\ncz 0 1\n"


def rand_circuit(rng, k, length):
    gates = []
    for _ in range(length):
        kind = rng.choice(["cz", "swap", "h", "x"])
        if kind in ("cz", "swap"):
            i, j = rng.sample(range(k), 2)
            gates.append(cz(i, j) if kind == "cz" else swap(i, j))
        else:
            q = rng.randrange(k)
            gates.append(h(q) if kind == "h" else x(q))
    return Circuit(k, tuple(gates))


def test_round_trip_random_circuits():
    rng = random.Random(99)
    for _ in range(100):
        c = rand_circuit(rng, rng.randint(2, 6), rng.randint(0, 20))
        text = serialize_circuit(c)
        assert parse_circuit(text) == c
        assert serialize_circuit(parse_circuit(text)) == text


def test_check_topology():
    c = Circuit(3, (cz(0, 2),))
    assert len(check_topology(c, Topology.LINE)) == 1
    assert check_topology(c, Topology.COMPLETE) == []
    c = Circuit(3, (swap(1, 2), cz(0, 1)))
    assert check_topology(c, Topology.LINE) == []


def test_gate_validation():
    with pytest.raises(ValueError):
        cz(1, 1)
    with pytest.raises(ValueError):
        Circuit(2, (cz(0, 2),))
    assert cz(2, 0).qubits == (0, 2)
