"""Plain key/value rendering of classification results.

One ``key: value`` pair per line; exact scalars print as
``p/q + r/s*sqrt2 + i*(...)`` with vanishing parts omitted.
"""

from __future__ import annotations

from fractions import Fraction

from .group import PairSet
from .ring import RingScalar
from .states import ParamSpec


def format_scalar(value) -> str:
    if isinstance(value, (int, Fraction, RingScalar)):
        return str(value)
    if isinstance(value, complex):
        return f"{value.real:.12g}{value.imag:+.12g}j"
    return str(value)


def format_pairs(e: PairSet) -> str:
    if not e.pairs:
        return "{}"
    return ",".join(f"{i}{j}" for i, j in sorted(e.pairs))


def format_params(params: ParamSpec) -> str:
    return "; ".join(f"({format_scalar(p0)}, {format_scalar(p1)})" for p0, p1 in params.pairs)


def render(lines: list[tuple[str, object]]) -> str:
    return "\n".join(f"{key}: {value}" for key, value in lines) + "\n"


def classification_report_3q(e: PairSet, params: ParamSpec, delta, cls) -> str:
    return render([
        ("qubits", 3),
        ("pairs", format_pairs(e)),
        ("params", format_params(params)),
        ("backend", "exact"),
        ("delta", format_scalar(delta)),
        ("class", cls.value),
    ])


def classification_report_4q(e: PairSet, params: ParamSpec, result) -> str:
    inv = result.invariants
    lines = [
        ("qubits", 4),
        ("pairs", format_pairs(e)),
        ("params", format_params(params)),
        ("backend", "exact"),
        ("case", result.case),
        ("family", result.family),
        ("B", format_scalar(inv.B)),
        ("L", format_scalar(inv.L)),
        ("M", format_scalar(inv.M)),
        ("N", format_scalar(inv.N)),
        ("Dxy", format_scalar(inv.Dxy)),
        ("root-configs", "; ".join(c.value for c in result.root_configs)),
    ]
    if result.covariant_vanishing is not None:
        vanished = sorted(k for k, v in result.covariant_vanishing.items() if v)
        lines.append(("vanishing-covariants", ",".join(vanished) or "none"))
    lines.append(("confirmations", "ok" if result.confirmations_ok else "mismatch"))
    for note in result.notes:
        lines.append(("note", note))
    return render(lines)


def classification_report_5q(e: PairSet, params: ParamSpec, witness) -> str:
    sol = "; ".join(
        f"({format_scalar(v0)}, {format_scalar(v1)})" for v0, v1 in witness.solution.pairs
    )
    lines = [
        ("qubits", 5),
        ("pairs", format_pairs(e)),
        ("params", format_params(params)),
        ("backend", "exact"),
        ("edge-class", witness.class_index),
        ("class-shape", witness.class_shape),
        ("solution", sol),
        ("hyperdeterminant", "0 (nontrivial system solution verified)"),
        ("solution-source", "fallback" if witness.from_fallback else "table"),
    ]
    if witness.discrepancy:
        lines.append(("table-discrepancy", witness.discrepancy))
    return render(lines)
