"""Bilinear forms, dual representations, Manin triples, and the four-way
equivalence audit on a candidate pair (A, Astar).

The central construction: a candidate pair of same-dimension tables induces
transpose actions (lA = R'(x)^T, rA = L'(x)^T on the dual side; lB, rB from
Astar likewise on A), a double product on A + Astar, and the hyperbolic
pairing [[0,I],[I,0]].  Four conditions are evaluated independently:

  1. the double with the standard pairing is a Manin triple,
  2. the commutator tables with the -ad^T actions form a Lie matched pair,
  3. the transpose actions form a matched pair of the original tables,
  4. condition 3 restated through the coproduct dualize(Astar) after a
     round trip back to a product table.

Condition 4 has no independent axiom to draw on, so it is deliberately the
round-trip restatement; any disagreement among the four is reported as a
finding, never patched over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraTable, right_zinbiel_residuals
from .coalgebra import dualize, dualize_co
from .matched_pair import (
    MatchedPair,
    check_lie_matched_pair,
    check_matched_pair,
    double,
    format_violation,
)
from .reports import Verdict, VerdictBundle, format_scalar, format_vector
from .tensors import Matrix, rank


@dataclass(frozen=True)
class BilinearFormTable:
    dim: int
    g: Matrix

    def __post_init__(self):
        if (self.g.rows, self.g.cols) != (self.dim, self.dim):
            raise ValueError("form matrix must be dim x dim")

    def pair_basis(self, i: int, j: int) -> Fraction:
        return self.g.get(i, j)


def standard_pairing(n: int) -> BilinearFormTable:
    entries = {}
    for i in range(n):
        entries[(i, n + i)] = Fraction(1)
        entries[(n + i, i)] = Fraction(1)
    return BilinearFormTable(2 * n, Matrix(2 * n, 2 * n, entries))


def check_form(a: AlgebraTable, form: BilinearFormTable) -> VerdictBundle:
    """symmetric, invariant (B(x.y, z) = B(x, y.z)), nondegenerate."""
    if a.dim != form.dim:
        raise ValueError("form and table dimensions differ")
    g = form.g

    sym = Verdict("symmetric", True)
    for (i, j), v in sorted(g.entries.items()):
        if g.get(j, i) != v:
            sym = Verdict(
                "symmetric",
                False,
                f"at (e{i},e{j}): {format_scalar(v)} vs {format_scalar(g.get(j, i))}",
                {"tuple": [i, j], "lhs": format_scalar(v), "rhs": format_scalar(g.get(j, i))},
            )
            break

    inv = Verdict("invariant", True)
    for i in range(a.dim):
        for j in range(a.dim):
            left = a.product_basis(i, j)  # B(e_i.e_j, e_l)
            for l in range(a.dim):
                lhs = sum((v * g.get(k, l) for k, v in left.items()), Fraction(0))
                rhs = sum(
                    (v * g.get(i, m) for m, v in a.product_basis(j, l).items()),
                    Fraction(0),
                )
                if lhs != rhs:
                    inv = Verdict(
                        "invariant",
                        False,
                        f"at (e{i},e{j},e{l}): B(xy,z) = {format_scalar(lhs)}, "
                        f"B(x,yz) = {format_scalar(rhs)}",
                        {
                            "tuple": [i, j, l],
                            "lhs": format_scalar(lhs),
                            "rhs": format_scalar(rhs),
                        },
                    )
                    break
            if not inv.holds:
                break
        if not inv.holds:
            break

    r = rank(g)
    nondeg = (
        Verdict("nondegenerate", True)
        if r == form.dim
        else Verdict(
            "nondegenerate", False, f"rank {r} < dim {form.dim}", {"rank": r, "dim": form.dim}
        )
    )
    return VerdictBundle("bilinear_form", (sym, inv, nondeg))


@dataclass(frozen=True)
class BialgebraCandidate:
    a: AlgebraTable
    astar: AlgebraTable

    def __post_init__(self):
        if self.a.dim != self.astar.dim:
            raise ValueError("candidate tables must have equal dimensions")


def dual_reps(bc: BialgebraCandidate) -> MatchedPair:
    """Transpose actions against the natural pairing: <T^t f, v> = <f, T v>."""
    n = bc.a.dim
    la = tuple(bc.a.right_mult_matrix(i).transpose() for i in range(n))
    ra = tuple(bc.a.left_mult_matrix(i).transpose() for i in range(n))
    lb = tuple(bc.astar.right_mult_matrix(i).transpose() for i in range(n))
    rb = tuple(bc.astar.left_mult_matrix(i).transpose() for i in range(n))
    return MatchedPair(bc.a, bc.astar, la, ra, lb, rb)


def drinfeld_double(bc: BialgebraCandidate) -> AlgebraTable:
    return double(dual_reps(bc))


def check_manin_triple(bc: BialgebraCandidate) -> VerdictBundle:
    n = bc.a.dim
    d = drinfeld_double(bc)
    form = standard_pairing(n)

    blocks = Verdict("blocks_are_subalgebras", True)
    for (i, j, k), v in sorted(d.c.entries.items()):
        if i < n and j < n and k >= n:
            blocks = Verdict(
                "blocks_are_subalgebras",
                False,
                f"A-block product leaks: entry ({i},{j},{k}) = {format_scalar(v)}",
                {"entry": [i, j, k, format_scalar(v)]},
            )
            break
        if i >= n and j >= n and k < n:
            blocks = Verdict(
                "blocks_are_subalgebras",
                False,
                f"dual-block product leaks: entry ({i},{j},{k}) = {format_scalar(v)}",
                {"entry": [i, j, k, format_scalar(v)]},
            )
            break

    iso = Verdict("isotropic_blocks", True)
    for (i, j), v in sorted(form.g.entries.items()):
        if (i < n) == (j < n):
            iso = Verdict(
                "isotropic_blocks",
                False,
                f"pairing nonzero inside a block at (e{i},e{j})",
                {"tuple": [i, j]},
            )
            break

    zin = Verdict("double_right_zinbiel", True)
    hits = right_zinbiel_residuals(d, first_only=True)
    if hits:
        (x, y, z), res = hits[0]
        zin = Verdict(
            "double_right_zinbiel",
            False,
            f"at (e{x},e{y},e{z}): residual = {format_vector(res)}",
            {"tuple": [x, y, z], "residual": [[k, format_scalar(v)] for k, v in res.items()]},
        )

    inv = check_form(d, form).verdict_for("invariant")
    inv = Verdict("pairing_invariant", inv.holds, inv.witness_text, inv.witness_data)

    return VerdictBundle("manin_triple", (blocks, iso, zin, inv))


def _bundle_verdict(name: str, bundle: VerdictBundle) -> Verdict:
    if bundle.holds:
        return Verdict(name, True)
    first = next(v for v in bundle.verdicts if not v.holds)
    text = f"{first.name} fails"
    if first.witness_text:
        text += f" {first.witness_text}"
    return Verdict(name, False, text, {"failing": first.name, "witness": first.witness_data})


@dataclass(frozen=True)
class EquivalenceReport:
    conditions: tuple[Verdict, Verdict, Verdict, Verdict]
    findings: tuple[str, ...]

    @property
    def booleans(self) -> tuple[bool, bool, bool, bool]:
        return tuple(v.holds for v in self.conditions)

    @property
    def agreement(self) -> bool:
        return len(set(self.booleans)) == 1

    def jsonable(self) -> dict:
        return {
            "kind": "equivalence_report",
            "conditions": [v.jsonable() for v in self.conditions],
            "agreement": self.agreement,
            "findings": list(self.findings),
        }

    def lines(self) -> list[str]:
        out = [f"[equivalence] {v.line()}" for v in self.conditions]
        for f in self.findings:
            out.append(f"[equivalence] finding: {f}")
        return out


def equivalence_audit(bc: BialgebraCandidate) -> EquivalenceReport:
    n = bc.a.dim

    cond1 = _bundle_verdict("manin_triple", check_manin_triple(bc))

    g = bc.a.commutator()
    h = bc.astar.commutator()
    rho = tuple(
        (bc.a.left_mult_matrix(i) - bc.a.right_mult_matrix(i)).transpose().scale(Fraction(-1))
        for i in range(n)
    )
    mu = tuple(
        (bc.astar.left_mult_matrix(i) - bc.astar.right_mult_matrix(i))
        .transpose()
        .scale(Fraction(-1))
        for i in range(n)
    )
    cond2 = _bundle_verdict("lie_matched_pair", check_lie_matched_pair(g, h, rho, mu))

    violations = check_matched_pair(dual_reps(bc))
    if violations:
        v = violations[0]
        cond3 = Verdict(
            "zinbiel_matched_pair",
            False,
            format_violation(v),
            {"condition": v.condition, "where": list(v.where)},
        )
    else:
        cond3 = Verdict("zinbiel_matched_pair", True)

    coproduct = dualize(bc.astar)
    recovered = dualize_co(coproduct)
    if recovered != bc.astar:
        cond4 = Verdict(
            "bialgebra",
            False,
            "coproduct round trip disagrees with the dual product table",
            {"roundtrip": False},
        )
    else:
        rebuilt = check_matched_pair(dual_reps(BialgebraCandidate(bc.a, recovered)))
        if rebuilt:
            v = rebuilt[0]
            cond4 = Verdict(
                "bialgebra",
                False,
                format_violation(v),
                {"condition": v.condition, "where": list(v.where)},
            )
        else:
            cond4 = Verdict("bialgebra", True)

    conditions = (cond1, cond2, cond3, cond4)
    findings = []
    flags = [v.holds for v in conditions]
    if len(set(flags)) != 1:
        per = ", ".join(f"{v.name}={v.holds}" for v in conditions)
        findings.append(f"conditions disagree: {per}")
    return EquivalenceReport(conditions, tuple(findings))
