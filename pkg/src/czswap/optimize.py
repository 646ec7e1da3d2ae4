"""Circuit simplification over the phase/swap gate set.

Pipeline pieces:

* ``normalize`` folds a c-Z/SWAP circuit into its unique normal form (E, sigma)
  using (E, s)(E', s') = (E xor s(E'), s o s').
* ``synthesize_complete`` re-emits a normal form as |E| c-Z gates followed by
  a minimal transposition decomposition of sigma (complete-graph topology).
* ``rothe_reduced_word`` reads a reduced word for a permutation off its
  inversion diagram; the word length equals the inversion count.
* ``dehn_reduce`` shortens line-alphabet words greedily: involutive letters
  separated only by commuting letters cancel, and any factor u of a relator
  uv with |u| > |v| is replaced by the inverse of v.
* ``heuristic_line_reduce`` adds the length-preserving half-relator rewrites
  (commutations, braid moves, the phase/swap exchange family) and runs a
  budgeted best-first search over them.
* ``bfs_minimize`` is the exact oracle: shortest words from the Cayley-graph
  closure, practical for k <= 5 only.
"""

from __future__ import annotations

import heapq

from .circuit import Circuit, Gate, Topology, cz, swap
from .group import NormalForm, Permutation, conjugate_pairs
from .simulate import enumerate_group
from .words import (
    GeneratorWord,
    Letter,
    RelationSet,
    letters_commute,
)


class UnsupportedGateError(ValueError):
    pass


def normalize(c: Circuit) -> NormalForm:
    """Fold a c-Z/SWAP circuit into its normal form Z_E S_sigma.

    The gate list is applied first-gate-first, so the operator word is the
    reversed gate list; it is folded left to right through the product law.
    """
    acc = NormalForm.identity(c.k)
    for gate in reversed(c.gates):
        if gate.name == "cz":
            nf = NormalForm.z(c.k, *gate.qubits)
        elif gate.name == "swap":
            nf = NormalForm.s(c.k, *gate.qubits)
        else:
            raise UnsupportedGateError(
                f"normalize is defined on the c-Z/SWAP fragment only, found {gate}"
            )
        acc = acc * nf
    return acc


def synthesize_complete(nf: NormalForm) -> Circuit:
    """Emit |E| c-Z gates followed by sum_cycles (len-1) SWAP gates.

    The c-Z gates come first in time and must therefore carry sigma^{-1}(E);
    the SWAP block realises each cycle (i1..il) as the transposition product
    (i1 i2)(i2 i3)...(i_{l-1} i_l), reversed into application order.  Both
    gate counts are individually minimal, so the circuit is as well.
    """
    gates: list[Gate] = []
    for i, j in sorted(conjugate_pairs(nf.perm.inverse(), nf.phase)):
        gates.append(cz(i, j))
    op_order: list[tuple[int, int]] = []
    for cyc in nf.perm.cycles():
        op_order.extend(zip(cyc, cyc[1:]))
    for i, j in reversed(op_order):
        gates.append(swap(i, j))
    return Circuit(nf.k, tuple(gates))


def word_to_circuit(w: GeneratorWord) -> Circuit:
    """A word is an operator product; its gates run in the reverse order."""
    gates = []
    for kind, i, j in reversed(w.letters):
        gates.append(cz(i, j) if kind == "z" else swap(i, j))
    return Circuit(w.k, tuple(gates))


def circuit_to_word(c: Circuit) -> GeneratorWord:
    letters: list[Letter] = []
    for gate in reversed(c.gates):
        if gate.name == "cz":
            letters.append(("z", *gate.qubits))
        elif gate.name == "swap":
            letters.append(("s", *gate.qubits))
        else:
            raise UnsupportedGateError(f"cannot express {gate} as a generator word")
    return GeneratorWord(c.k, tuple(letters))


# ---------------------------------------------------------------------------
# Reduced words for permutations
# ---------------------------------------------------------------------------


def rothe_reduced_word(sigma: Permutation) -> GeneratorWord:
    """Reduced decomposition of sigma into adjacent transpositions.

    Cell (r, c) of the inversion diagram is filled when sigma(r) > c and
    sigma^{-1}(c) > r.  Cells of column c are labelled c, c+1, ... downwards;
    reading rows top to bottom, each row right to left, yields a word of
    length equal to the inversion count that evaluates back to sigma.
    """
    k = sigma.k
    inv = sigma.inverse()
    filled: dict[int, list[int]] = {}
    for r in range(k):
        for c in range(k):
            if sigma(r) > c and inv(c) > r:
                filled.setdefault(c, []).append(r)
    labels: dict[tuple[int, int], int] = {}
    for c, rows in filled.items():
        for rank, r in enumerate(sorted(rows)):
            labels[(r, c)] = c + rank
    letters: list[Letter] = []
    for r in range(k):
        row_cells = sorted((c for c in filled if r in filled[c]), reverse=True)
        for c in row_cells:
            letters.append(("s", labels[(r, c)], labels[(r, c)] + 1))
    return GeneratorWord(k, tuple(letters))


# ---------------------------------------------------------------------------
# Dehn reduction
# ---------------------------------------------------------------------------


def _cancel_commuting_pair(letters: list[Letter]) -> bool:
    """Delete the leftmost pair of equal letters separated only by letters
    that commute with them (two involutions brought together cancel)."""
    n = len(letters)
    for i in range(n - 1):
        a = letters[i]
        for j in range(i + 1, n):
            if letters[j] == a:
                del letters[j]
                del letters[i]
                return True
            if not letters_commute(a, letters[j]):
                break
    return False


def _find_dehn_step(letters: list[Letter], rels: RelationSet):
    """Leftmost position, then longest factor, then lexicographically first
    relator: a factor u with relator uv, |u| > |v|, replaced by v^-1."""
    n = len(letters)
    if n == 0:
        return None
    max_len = max(len(r) for r in rels.sorted_relators)
    for pos in range(n):
        top = min(n - pos, max_len)
        for length in range(top, 0, -1):
            factor = tuple(letters[pos:pos + length])
            for r in rels.sorted_relators:
                if len(r) < 2 * length and r[:length] == factor:
                    replacement = tuple(reversed(r[length:]))
                    return pos, length, replacement
    return None


def dehn_reduce(w: GeneratorWord, rels: RelationSet | None = None) -> GeneratorWord:
    """Greedy word shortening; every step strictly decreases the length.

    Between relator steps the word is freely reduced: equal letters cancel as
    soon as only commuting letters separate them.  The result has no factor u
    of any relator uv with |u| > |v|.
    """
    if not w.is_line_word():
        raise ValueError("Dehn reduction is defined on line-alphabet words")
    if rels is None:
        rels = RelationSet.line_presentation(w.k)
    if rels.k != w.k:
        raise ValueError(f"relation set is for k={rels.k}, word for k={w.k}")
    letters = list(w.letters)
    while True:
        while _cancel_commuting_pair(letters):
            pass
        step = _find_dehn_step(letters, rels)
        if step is None:
            break
        pos, length, replacement = step
        letters[pos:pos + length] = replacement
    return GeneratorWord(w.k, tuple(letters))


# ---------------------------------------------------------------------------
# Budgeted best-first search over length-preserving rewrites
# ---------------------------------------------------------------------------


def _rewrite_moves(rels: RelationSet) -> dict[Letter, list[tuple[tuple[Letter, ...], tuple[Letter, ...]]]]:
    """All factor rewrites u -> v^-1 from relator splits uv with |u| >= |v|,
    indexed by the first letter of u.  Strict splits shorten the word, equal
    splits preserve length (commutations, braid moves, the exchange family)."""
    moves: dict[Letter, list[tuple[tuple[Letter, ...], tuple[Letter, ...]]]] = {}
    seen = set()
    for r in rels.sorted_relators:
        for t in range(1, len(r) + 1):
            if t < len(r) - t:
                continue
            u, v = r[:t], r[t:]
            viv = tuple(reversed(v))
            if u == viv or (u, viv) in seen:
                continue
            seen.add((u, viv))
            moves.setdefault(u[0], []).append((u, viv))
    for lst in moves.values():
        lst.sort(key=lambda m: (len(m[0]), m))
    return moves


def heuristic_line_reduce(
    w: GeneratorWord,
    budget: int = 10000,
    rels: RelationSet | None = None,
) -> GeneratorWord:
    """Best-first search over Dehn steps plus length-preserving rewrites.

    Deterministic for a fixed budget: the frontier is ordered by
    (length, letters) and the budget counts node expansions.  Returns the
    shortest word found, or the input unchanged when nothing shorter appears.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    if not w.is_line_word():
        raise ValueError("heuristic reduction is defined on line-alphabet words")
    if rels is None:
        rels = RelationSet.line_presentation(w.k)
    moves = _rewrite_moves(rels)

    start = tuple(w.letters)
    best = start
    seen = {start}
    heap: list[tuple[int, tuple[Letter, ...]]] = [(len(start), start)]
    expansions = 0
    while heap and expansions < budget:
        length, letters = heapq.heappop(heap)
        expansions += 1
        if (length, letters) < (len(best), best):
            best = letters
        for pos, first in enumerate(letters):
            for u, viv in moves.get(first, ()):
                if letters[pos:pos + len(u)] != u:
                    continue
                child = letters[:pos] + viv + letters[pos + len(u):]
                if child not in seen:
                    seen.add(child)
                    heapq.heappush(heap, (len(child), child))
    if len(best) < len(start):
        return GeneratorWord(w.k, best)
    return w


# ---------------------------------------------------------------------------
# Exact minimization through the Cayley graph
# ---------------------------------------------------------------------------


def bfs_minimize(nf: NormalForm, topology: Topology = Topology.LINE) -> GeneratorWord:
    """Provably minimal word for nf over the topology's generator alphabet.

    Backed by the breadth-first group closure, so it shares that oracle's
    k <= 5 cap (the Cayley graph is the whole group).
    """
    enum = enumerate_group(nf.k, topology)
    return GeneratorWord(nf.k, tuple(enum.minimal_word_letters(nf)))
