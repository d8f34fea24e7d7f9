"""Shared verdict container and deterministic formatting helpers.

All renderers sort their sparse data, so a report is byte-identical no matter
how the underlying computation was scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .tensors import Matrix, Vector, format_scalar


@dataclass(frozen=True)
class Verdict:
    """One named yes/no finding, with an optional preformatted witness."""

    name: str
    holds: bool
    witness_text: str | None = None
    witness_data: dict | None = None

    def line(self) -> str:
        if self.holds:
            return f"{self.name}: HOLDS"
        if self.witness_text:
            return f"{self.name}: FAILS {self.witness_text}"
        return f"{self.name}: FAILS"

    def jsonable(self) -> dict:
        return {
            "name": self.name,
            "verdict": "holds" if self.holds else "fails",
            "witness": self.witness_data,
        }


@dataclass(frozen=True)
class VerdictBundle:
    """A named group of verdicts; holds iff every member does."""

    kind: str
    verdicts: tuple[Verdict, ...]

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def verdict_for(self, name: str) -> Verdict:
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def lines(self) -> list[str]:
        return [f"[{self.kind}] {v.line()}" for v in self.verdicts]

    def jsonable(self) -> dict:
        return {
            "kind": self.kind,
            "holds": self.holds,
            "verdicts": [v.jsonable() for v in self.verdicts],
        }


def format_coeff(value: Fraction) -> str:
    """Coefficient as it appears in front of a basis symbol."""
    return f"({format_scalar(value)})"


def format_vector(v: Vector | Mapping[int, Fraction], symbol: str = "e") -> str:
    """Render a sparse vector as e.g. ``e1 + (1/2)e3 - (1/30)e5``."""
    entries = sorted(v.entries.items()) if isinstance(v, Vector) else sorted(v.items())
    if not entries:
        return "0"
    parts = []
    for idx, (k, val) in enumerate(entries):
        mag = abs(val)
        body = f"{symbol}{k}" if mag == 1 else f"({format_scalar(mag)}){symbol}{k}"
        if idx == 0:
            parts.append(body if val > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if val > 0 else '-'} {body}")
    return " ".join(parts)


def format_assignment(assignment: tuple[int, ...], symbol: str = "e") -> str:
    return "(" + ",".join(f"{symbol}{i}" for i in assignment) + ")"


def vector_jsonable(v: Vector | Mapping[int, Fraction]) -> list:
    entries = sorted(v.entries.items()) if isinstance(v, Vector) else sorted(v.items())
    return [[k, format_scalar(val)] for k, val in entries]


def matrix_jsonable(m: Matrix) -> list:
    return [[r, c, format_scalar(val)] for (r, c), val in m.items()]


def format_matrix(m: Matrix) -> str:
    if m.is_zero:
        return "0"
    return ", ".join(f"[{r},{c}]={format_scalar(v)}" for (r, c), v in m.items())


def matrix_equality_verdict(
    name: str, pairs, var_names: tuple[str, str, str] = ("x", "y", "v")
) -> Verdict:
    """First-witness verdict for a family of matrix equalities.

    ``pairs`` yields ((i, j), lhs, rhs) in scan order; the witness is the first
    column where the matrices differ, reported as module vectors.
    """
    for (i, j), lhs, rhs in pairs:
        diff = lhs - rhs
        if diff.is_zero:
            continue
        beta = min(c for (_, c) in diff.entries)
        lcol, rcol = lhs.column(beta), rhs.column(beta)
        a, b, v = var_names
        text = (
            f"at {a}=e{i}, {b}=e{j}, {v}=e{beta}: "
            f"lhs = {format_vector(lcol)}, rhs = {format_vector(rcol)}"
        )
        data = {
            "tuple": [i, j, beta],
            "variables": list(var_names),
            "lhs": vector_jsonable(lcol),
            "rhs": vector_jsonable(rcol),
        }
        return Verdict(name, False, text, data)
    return Verdict(name, True)


def vector_equality_verdict(name: str, triples, var_names: tuple[str, ...]) -> Verdict:
    """First-witness verdict for a family of vector equalities.

    ``triples`` yields (assignment, lhs_dict, rhs_dict) in scan order.
    """
    for assignment, lhs, rhs in triples:
        diff = dict(lhs)
        for k, v in rhs.items():
            acc = diff.get(k, 0) - v
            if acc:
                diff[k] = acc
            elif k in diff:
                del diff[k]
        diff = {k: v for k, v in diff.items() if v}
        if not diff:
            continue
        where = ", ".join(f"{n}=e{i}" for n, i in zip(var_names, assignment))
        text = f"at {where}: lhs = {format_vector(lhs)}, rhs = {format_vector(rhs)}"
        data = {
            "tuple": list(assignment),
            "variables": list(var_names),
            "lhs": vector_jsonable(lhs),
            "rhs": vector_jsonable(rhs),
            "residual": vector_jsonable(diff),
        }
        return Verdict(name, False, text, data)
    return Verdict(name, True)
