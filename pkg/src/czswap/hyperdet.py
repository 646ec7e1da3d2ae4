"""Hyperdeterminant nullity through its system-of-equations witness.

The hyperdeterminant of a k-linear ground form vanishes exactly when the form
and all its 2k first partial derivatives share a common zero that is
nontrivial: no variable pair sits at (0, 0).  That criterion needs no giant
invariant polynomial, only exact evaluation, so it scales to five qubits and
to the GHZ genericity question.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import MultiPoly, VarId
from .ring import RingScalar
from .states import PureState, named_state


def ground_form(state: PureState) -> MultiPoly:
    """The multilinear form sum_n amps[n] * prod_i x(i)_{bit_i(n)}; variable
    pair i belongs to qubit i.  Uses exact amplitudes when available."""
    amps = state.exact_amplitudes()
    if amps is None:
        amps = state.amps
    k = state.k
    poly = MultiPoly.zero(k)
    for n, a in enumerate(amps):
        if not a:
            continue
        exps = []
        for i in range(k):
            bit = (n >> i) & 1
            exps.extend((1 - bit, bit))
        poly = poly + MultiPoly.monomial(k, tuple(exps), a)
    return poly


@dataclass(frozen=True)
class SystemSolution:
    """Candidate common zero: one exact value pair per qubit, none (0, 0)."""

    pairs: tuple[tuple[RingScalar, RingScalar], ...]

    def __post_init__(self):
        coerced = tuple(
            (RingScalar.coerce(v0), RingScalar.coerce(v1)) for v0, v1 in self.pairs
        )
        object.__setattr__(self, "pairs", coerced)
        for q, (v0, v1) in enumerate(coerced):
            if v0.is_zero() and v1.is_zero():
                raise ValueError(f"solution pair for qubit {q} is trivial (0, 0)")

    @property
    def k(self) -> int:
        return len(self.pairs)


def hyperdet_system_check(state: PureState, sol: SystemSolution) -> bool:
    """True iff the ground form and all its first partials vanish at sol.

    The solution's nontriviality is enforced by its type, so a True answer
    witnesses a vanishing hyperdeterminant.
    """
    if sol.k != state.k:
        raise ValueError(f"solution has {sol.k} pairs, state has {state.k} qubits")
    f = ground_form(state)
    point = sol.pairs
    if f.evaluate(point) != 0:
        return False
    for i in range(state.k):
        for comp in (0, 1):
            if f.differentiate(VarId(i, comp)).evaluate(point) != 0:
                return False
    return True


def ghz_generic(k: int) -> bool:
    """Whether the GHZ state on k qubits is generically entangled
    (nonvanishing hyperdeterminant).

    The GHZ ground form is x(1)_0...x(k)_0 + x(1)_1...x(k)_1 and every
    equation of its system is a monomial (each partial) or a sum of two
    monomials (the form itself), so solvability depends only on which
    component of each pair is zero.  The search over all component-zero
    patterns is therefore a complete decision procedure: a pattern solves
    the partials iff at least two pairs zero component 0 and at least two
    zero component 1, disjointly (a pattern zeroing neither component of
    some pair leaves that pair's partial monomials untouched).  Candidate
    patterns are validated through the exact checker before being believed.
    """
    if not 2 <= k <= 8:
        raise ValueError("supported range is 2 <= k <= 8")
    state = named_state("GHZ", k)
    one = RingScalar(1)
    zero = RingScalar(0)
    # pattern entry per qubit: 0 = x_0 zeroed, 1 = x_1 zeroed, 2 = neither
    pattern = [0] * k
    while True:
        n0 = pattern.count(0)
        n1 = pattern.count(1)
        if n0 >= 2 and n1 >= 2:
            pairs = tuple(
                (zero, one) if p == 0 else (one, zero) if p == 1 else (one, one)
                for p in pattern
            )
            if hyperdet_system_check(state, SystemSolution(pairs)):
                return False  # nontrivial solution: hyperdeterminant vanishes
        # next pattern in base 3
        for i in range(k):
            pattern[i] += 1
            if pattern[i] < 3:
                break
            pattern[i] = 0
        else:
            return True
