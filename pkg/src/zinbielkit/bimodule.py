"""Bimodules over a structure-constant algebra and the semidirect sum.

A bimodule is a pair of matrix families (l, r) indexed by the base basis,
acting on a module space V.  Maps compose as operators: the matrix product
``l_x @ r_y`` applies r_y first.  The axioms checked are

    l_x l_y           = l_{x.y} + l_{y.x}
    l_x r_y           = r_{x.y}
    r_{x.y}           = r_y r_x + r_y l_x

where l_v / r_v at a vector v means the coefficient-weighted sum of the
family.  These are exactly the conditions under which the semidirect sum
(x+u)*(y+v) = x.y + (l_x v + r_y u) inherits the right-orientation Zinbiel
identity from the base (the V*V block is zero by construction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraTable, algebra_from_entries
from .reports import Verdict, matrix_equality_verdict
from .tensors import DimensionMismatch, Matrix, Vector, linear_combination


@dataclass(frozen=True)
class Bimodule:
    base: AlgebraTable
    v_dim: int
    left_maps: tuple[Matrix, ...]
    right_maps: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.left_maps) != self.base.dim or len(self.right_maps) != self.base.dim:
            raise DimensionMismatch("need one l and one r matrix per base basis vector")
        for m in (*self.left_maps, *self.right_maps):
            if (m.rows, m.cols) != (self.v_dim, self.v_dim):
                raise DimensionMismatch("action matrices must be v_dim x v_dim")

    def left_at(self, coeffs: dict) -> Matrix:
        if not coeffs:
            return Matrix.zero(self.v_dim, self.v_dim)
        return linear_combination(self.left_maps, coeffs)

    def right_at(self, coeffs: dict) -> Matrix:
        if not coeffs:
            return Matrix.zero(self.v_dim, self.v_dim)
        return linear_combination(self.right_maps, coeffs)


def regular_bimodule(a: AlgebraTable) -> Bimodule:
    """The algebra acting on itself: l_i left multiplication, r_i right."""
    return Bimodule(
        a,
        a.dim,
        tuple(a.left_mult_matrix(i) for i in range(a.dim)),
        tuple(a.right_mult_matrix(i) for i in range(a.dim)),
    )


def zero_bimodule(a: AlgebraTable, v_dim: int) -> Bimodule:
    z = Matrix.zero(v_dim, v_dim)
    return Bimodule(a, v_dim, (z,) * a.dim, (z,) * a.dim)


@dataclass(frozen=True)
class BimoduleViolation:
    axiom: str
    pair: tuple[int, int]
    residual: Matrix


_AXIOMS = ("left_composition", "mixed_composition", "right_composition")


def check_bimodule(b: Bimodule) -> list[BimoduleViolation]:
    """All axiom violations over basis pairs, in (axiom, i, j) order."""
    out = []
    n = b.base.dim
    for i in range(n):
        for j in range(n):
            prod_ij = b.base.product_basis(i, j)
            prod_ji = b.base.product_basis(j, i)
            r_ij = b.right_at(prod_ij)
            residuals = (
                b.left_maps[i] @ b.left_maps[j] - b.left_at(prod_ij) - b.left_at(prod_ji),
                b.left_maps[i] @ b.right_maps[j] - r_ij,
                r_ij - b.right_maps[j] @ b.right_maps[i] - b.right_maps[j] @ b.left_maps[i],
            )
            for axiom, residual in zip(_AXIOMS, residuals):
                if not residual.is_zero:
                    out.append(BimoduleViolation(axiom, (i, j), residual))
    return sorted(out, key=lambda v: (_AXIOMS.index(v.axiom), v.pair))


@dataclass(frozen=True)
class DerivedRelationsReport:
    vacuous: bool
    relations: tuple[Verdict, ...]


def check_derived_relations(b: Bimodule) -> DerivedRelationsReport:
    """Audit of the two textbook derived relations, as printed.

    The first relation ``l_{x.y} = r_y l_x`` is ambiguous about composition
    order, so both readings are evaluated: ``l_then_r`` applies l first
    (matrix r_y @ l_x), ``r_then_l`` applies r first (matrix l_x @ r_y).
    The second is commutation of the right maps, r_x r_y = r_y r_x.
    Neither needs to hold on bimodules that pass the axioms; the verdicts are
    findings, and the report is vacuous when the axioms themselves fail.
    """
    n = b.base.dim
    vacuous = bool(check_bimodule(b))

    def pairs(rhs_of):
        for i in range(n):
            for j in range(n):
                yield (i, j), b.left_at(b.base.product_basis(i, j)), rhs_of(i, j)

    def commute_pairs():
        for i in range(n):
            for j in range(n):
                yield (i, j), b.right_maps[i] @ b.right_maps[j], b.right_maps[j] @ b.right_maps[i]

    relations = (
        matrix_equality_verdict(
            "left_of_product_l_then_r", pairs(lambda i, j: b.right_maps[j] @ b.left_maps[i])
        ),
        matrix_equality_verdict(
            "left_of_product_r_then_l", pairs(lambda i, j: b.left_maps[i] @ b.right_maps[j])
        ),
        matrix_equality_verdict("right_maps_commute", commute_pairs()),
    )
    return DerivedRelationsReport(vacuous, relations)


def semidirect_sum(b: Bimodule) -> AlgebraTable:
    """Product table on base + V; (x+u)*(y+v) = x.y + (l_x v + r_y u)."""
    n, m = b.base.dim, b.v_dim
    entries = list((i, j, k, v) for (i, j, k), v in b.base.c.entries.items())
    for i in range(n):
        for (alpha, beta), v in b.left_maps[i].entries.items():
            entries.append((i, n + beta, n + alpha, v))
        for (alpha, beta), v in b.right_maps[i].entries.items():
            entries.append((n + beta, i, n + alpha, v))
    labels = b.base.basis_labels + tuple(f"v{k}" for k in range(m))
    return algebra_from_entries(n + m, entries, labels)


@dataclass(frozen=True)
class SubadjacentReport:
    maps: tuple[Matrix, ...]
    representation: Verdict


def induced_subadjacent_map(b: Bimodule) -> SubadjacentReport:
    """The family x -> l_x - r_x, with its bracket-representation verdict.

    Checks (l-r)_{[e_i,e_j]} = [(l-r)_i, (l-r)_j] against the commutator of
    the base table.  This can fail even on axiom-passing bimodules; the
    verdict records what actually happens.
    """
    n = b.base.dim
    maps = tuple(b.left_maps[i] - b.right_maps[i] for i in range(n))
    bracket = b.base.commutator()

    def pairs():
        for i in range(n):
            for j in range(n):
                coeffs = bracket.product_basis(i, j)
                lhs = (
                    linear_combination(maps, coeffs)
                    if coeffs
                    else Matrix.zero(b.v_dim, b.v_dim)
                )
                yield (i, j), lhs, maps[i] @ maps[j] - maps[j] @ maps[i]

    return SubadjacentReport(maps, matrix_equality_verdict("bracket_representation", pairs()))
