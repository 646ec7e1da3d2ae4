"""Words over phase/swap generators, and the relation sets used to rewrite them.

Letters are triples (kind, i, j) with kind 'z' (c-Z on qubits i, j) or 's'
(SWAP on i, j), i < j.  The line alphabet restricts to adjacent pairs
j = i + 1, written ``z0 s3 ...``; a non-adjacent letter serializes with an
explicit pair, e.g. ``z0.2``.  All letters are involutions, so the inverse of
a word is its reversal.

A word denotes the operator product of its letters read left to right, the
leftmost letter acting last on a ket (same as the usual operator notation).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .group import NormalForm, nf_product

Letter = tuple[str, int, int]


def z_letter(i: int, j: int | None = None) -> Letter:
    if j is None:
        j = i + 1
    if i > j:
        i, j = j, i
    return ("z", i, j)


def s_letter(i: int, j: int | None = None) -> Letter:
    if j is None:
        j = i + 1
    if i > j:
        i, j = j, i
    return ("s", i, j)


def letter_token(letter: Letter) -> str:
    kind, i, j = letter
    return f"{kind}{i}" if j == i + 1 else f"{kind}{i}.{j}"


def parse_letter(token: str) -> Letter:
    kind = token[0]
    if kind not in ("z", "s"):
        raise ValueError(f"bad letter {token!r}: must start with 'z' or 's'")
    body = token[1:]
    try:
        if "." in body:
            i_str, j_str = body.split(".", 1)
            i, j = int(i_str), int(j_str)
        else:
            i = int(body)
            j = i + 1
    except ValueError:
        raise ValueError(f"bad letter {token!r}") from None
    if i >= j:
        raise ValueError(f"bad letter {token!r}: need i < j")
    return (kind, i, j)


def letter_nf(letter: Letter, k: int) -> NormalForm:
    kind, i, j = letter
    return NormalForm.z(k, i, j) if kind == "z" else NormalForm.s(k, i, j)


def letters_commute(a: Letter, b: Letter) -> bool:
    """Whether the two generators commute as group elements."""
    ka, ia, ja = a
    kb, ib, jb = b
    if ka == "z" and kb == "z":
        return True
    sa, sb = {ia, ja}, {ib, jb}
    if sa == sb or not (sa & sb):
        return True
    return False


@dataclass(frozen=True)
class GeneratorWord:
    k: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        for kind, i, j in self.letters:
            if kind not in ("z", "s") or not (0 <= i < j < self.k):
                raise ValueError(f"letter {(kind, i, j)} invalid for k={self.k}")

    @staticmethod
    def from_tokens(k: int, text: str) -> "GeneratorWord":
        return GeneratorWord(k, tuple(parse_letter(t) for t in text.split()))

    def tokens(self) -> str:
        return " ".join(letter_token(l) for l in self.letters)

    def __len__(self):
        return len(self.letters)

    def is_line_word(self) -> bool:
        return all(j == i + 1 for _, i, j in self.letters)

    def evaluate(self) -> NormalForm:
        acc = NormalForm.identity(self.k)
        for letter in self.letters:
            acc = nf_product(acc, letter_nf(letter, self.k))
        return acc

    def inverse(self) -> "GeneratorWord":
        return GeneratorWord(self.k, tuple(reversed(self.letters)))


def evaluate_letters(k: int, letters) -> NormalForm:
    acc = NormalForm.identity(k)
    for letter in letters:
        acc = nf_product(acc, letter_nf(letter, k))
    return acc


# ---------------------------------------------------------------------------
# Presentations of the group over the line alphabet.
#
# The first presentation uses all the z_i and s_i with seven relation families;
# the second generates from z_0 and the s_i alone.  Both are verified against
# the normal-form semantics by the sim-oracle's presentation checker.
# ---------------------------------------------------------------------------


def _pow_word(letters: list[Letter], n: int) -> tuple[Letter, ...]:
    return tuple(letters) * n


def zs_relators(k: int) -> list[tuple[Letter, ...]]:
    """Defining relators over generators z_0..z_{k-2}, s_0..s_{k-2}."""
    if k < 2:
        raise ValueError("need at least two qubits")
    z = [z_letter(i) for i in range(k - 1)]
    s = [s_letter(i) for i in range(k - 1)]
    rels: list[tuple[Letter, ...]] = []
    for i in range(k - 1):
        rels.append(_pow_word([z[i]], 2))
        rels.append(_pow_word([s[i]], 2))
    for i in range(k - 1):
        for j in range(i + 2, k - 1):
            rels.append(_pow_word([s[i], s[j]], 2))
    for i in range(k - 2):
        rels.append(_pow_word([s[i], s[i + 1]], 3))
    for i in range(k - 1):
        for j in range(i + 1, k - 1):
            rels.append(_pow_word([z[i], z[j]], 2))
    for i in range(k - 1):
        for j in range(k - 1):
            if abs(i - j) != 1:
                rels.append(_pow_word([z[i], s[j]], 2))
    for i in range(k - 1):
        for j in range(k - 1):
            if abs(i - j) == 1:
                rels.append(_pow_word([z[i], s[j]], 4))
    for i in range(k - 2):
        rels.append((s[i], s[i + 1], z[i], s[i + 1], s[i], z[i + 1]))
    return rels


def z0s_relators(k: int) -> list[tuple[Letter, ...]]:
    """Defining relators of the small presentation: generators g_0..g_{k-1}
    realized as g_0 = z_0 and g_m = s_{m-1} for m >= 1."""
    if k < 2:
        raise ValueError("need at least two qubits")
    g: list[Letter] = [z_letter(0)] + [s_letter(m - 1) for m in range(1, k)]
    rels: list[tuple[Letter, ...]] = []
    for i in range(k):
        rels.append(_pow_word([g[i]], 2))
    for i in range(1, k):
        for j in range(i + 2, k):
            rels.append(_pow_word([g[i], g[j]], 2))
    for i in range(1, k - 1):
        rels.append(_pow_word([g[i], g[i + 1]], 3))
    for i in range(1, k):
        if i != 2:
            rels.append(_pow_word([g[0], g[i]], 2))
    if k >= 3:
        rels.append(_pow_word([g[0], g[2]], 4))
    if k >= 4:
        rels.append(_pow_word([g[0], g[2], g[3], g[1], g[2]], 4))
    return rels


def relator_closure(relators) -> frozenset[tuple[Letter, ...]]:
    """Close a relator list under cyclic shifts and inversion (reversal)."""
    out = set()
    for r in relators:
        words = {r[i:] + r[:i] for i in range(len(r))}
        words |= {tuple(reversed(w)) for w in words}
        out |= words
    return frozenset(out)


class RelationSet:
    """Relators of the line presentation, closed under cyclic shift and
    inversion; every member is checked to evaluate to the identity."""

    def __init__(self, k: int, relators):
        self.k = k
        self.relators = relator_closure(relators)
        for r in self.relators:
            if not evaluate_letters(k, r).is_identity():
                raise ValueError(f"relator {' '.join(map(letter_token, r))} is not a relation")
        self.sorted_relators = sorted(self.relators, key=lambda r: (len(r), r))

    @staticmethod
    @lru_cache(maxsize=None)
    def line_presentation(k: int) -> "RelationSet":
        return RelationSet(k, zs_relators(k))

    def __len__(self):
        return len(self.relators)

    def __contains__(self, word):
        return tuple(word) in self.relators
