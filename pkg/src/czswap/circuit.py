"""Gate-level circuit representation, text format and topology checks.

A circuit file starts with a header line ``qubits <k>`` followed by one gate
per line: ``cz <i> <j>``, ``swap <i> <j>``, ``h <i>``, ``x <i>``.  ``#`` opens
a comment and blank lines are skipped.  Canonical output uses lower-case
mnemonics, i < j on two-qubit gates, single spaces and a trailing newline.

File order is application order: the first gate line acts first on the ket.
The operator product therefore reads the gate list right to left; every
conversion between the two conventions happens at this module's boundary.

Qubit 0 is the least-significant bit of a basis-state index.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .group import canonical_pair

TWO_QUBIT_GATES = ("cz", "swap")
ONE_QUBIT_GATES = ("h", "x")


class CircuitSyntaxError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Gate:
    name: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        if self.name in TWO_QUBIT_GATES:
            if len(self.qubits) != 2:
                raise ValueError(f"{self.name} takes two qubits")
            i, j = self.qubits
            if i == j:
                raise ValueError(f"{self.name} needs two distinct qubits, got {i},{j}")
            if i > j:
                object.__setattr__(self, "qubits", (j, i))
        elif self.name in ONE_QUBIT_GATES:
            if len(self.qubits) != 1:
                raise ValueError(f"{self.name} takes one qubit")
        else:
            raise ValueError(f"unknown gate {self.name!r}")
        if min(self.qubits) < 0:
            raise ValueError("negative qubit index")

    def __str__(self):
        return " ".join([self.name, *map(str, self.qubits)])


def cz(i: int, j: int) -> Gate:
    return Gate("cz", canonical_pair(i, j))


def swap(i: int, j: int) -> Gate:
    return Gate("swap", canonical_pair(i, j))


def h(i: int) -> Gate:
    return Gate("h", (i,))


def x(i: int) -> Gate:
    return Gate("x", (i,))


@dataclass(frozen=True)
class Circuit:
    """Time-ordered gate sequence: gates[0] is applied first to the state."""

    k: int
    gates: tuple[Gate, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("qubit count must be positive")
        for g in self.gates:
            if max(g.qubits) >= self.k:
                raise ValueError(f"gate {g} out of range for {self.k} qubits")

    def __len__(self):
        return len(self.gates)

    def is_phase_swap_only(self) -> bool:
        return all(g.name in TWO_QUBIT_GATES for g in self.gates)

    def gate_count(self, name: str | None = None) -> int:
        if name is None:
            return len(self.gates)
        return sum(1 for g in self.gates if g.name == name)


class Topology(Enum):
    COMPLETE = "complete"
    LINE = "line"


def parse_circuit(text: str) -> Circuit:
    """Parse the text format; raises CircuitSyntaxError with a line number."""
    k = None
    gates: list[Gate] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if k is None:
            if tokens[0] != "qubits" or len(tokens) != 2:
                raise CircuitSyntaxError(line_no, "expected header 'qubits <k>'")
            try:
                k = int(tokens[1])
            except ValueError:
                raise CircuitSyntaxError(line_no, f"bad qubit count {tokens[1]!r}") from None
            if k < 1:
                raise CircuitSyntaxError(line_no, "qubit count must be positive")
            continue
        name = tokens[0]
        if name not in TWO_QUBIT_GATES + ONE_QUBIT_GATES:
            raise CircuitSyntaxError(line_no, f"unknown gate {name!r}")
        want = 2 if name in TWO_QUBIT_GATES else 1
        if len(tokens) - 1 != want:
            raise CircuitSyntaxError(line_no, f"{name} takes {want} qubit index(es)")
        try:
            qubits = tuple(int(t) for t in tokens[1:])
        except ValueError:
            raise CircuitSyntaxError(line_no, f"bad qubit index in {line!r}") from None
        if any(q < 0 or q >= k for q in qubits):
            raise CircuitSyntaxError(line_no, f"qubit index out of range in {line!r}")
        if want == 2 and qubits[0] == qubits[1]:
            raise CircuitSyntaxError(line_no, f"{name} needs two distinct qubits")
        gates.append(Gate(name, qubits))
    if k is None:
        raise CircuitSyntaxError(1, "missing 'qubits <k>' header")
    return Circuit(k, tuple(gates))


def serialize_circuit(c: Circuit) -> str:
    lines = [f"qubits {c.k}"]
    lines.extend(str(g) for g in c.gates)
    return "\n".join(lines) + "\n"


def check_topology(c: Circuit, topology: Topology) -> list[str]:
    """Empty list iff every two-qubit gate respects the topology."""
    if topology is Topology.COMPLETE:
        return []
    violations = []
    for pos, g in enumerate(c.gates):
        if g.name in TWO_QUBIT_GATES and g.qubits[1] - g.qubits[0] != 1:
            violations.append(
                f"gate {pos}: {g} spans non-adjacent qubits under the line topology"
            )
    return violations
