"""Structure-constant algebras over the rationals.

An ``AlgebraTable`` stores a bilinear product on a finite basis as a sparse
3-tensor ``c`` with the fixed convention

    e_i * e_j = sum_k c[i, j, k] e_k

(first index is always the left factor).  Everything downstream -- identity
checking, bimodules, doubles, dualization -- reads ``c`` through this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .tensors import ZERO, DimensionMismatch, Matrix, Tensor3, Vector


@dataclass(frozen=True)
class AlgebraTable:
    dim: int
    basis_labels: tuple[str, ...]
    c: Tensor3

    def __post_init__(self):
        if len(self.basis_labels) != self.dim:
            raise DimensionMismatch("basis label count != dim")
        if (self.c.d0, self.c.d1, self.c.d2) != (self.dim, self.dim, self.dim):
            raise DimensionMismatch("structure tensor shape != dim^3")

    @cached_property
    def _pair_products(self) -> dict:
        """(i, j) -> tuple of (k, coefficient); the sparse product table."""
        table: dict[tuple[int, int], list] = {}
        for (i, j, k), v in self.c.entries.items():
            table.setdefault((i, j), []).append((k, v))
        return {key: tuple(sorted(val)) for key, val in table.items()}

    def product_basis(self, i: int, j: int) -> dict:
        """Raw coefficient dict of e_i * e_j."""
        return {k: v for k, v in self._pair_products.get((i, j), ())}

    def multiply_raw(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict:
        """Bilinear extension of the product on raw coefficient dicts."""
        pair = self._pair_products
        out: dict[int, Fraction] = {}
        for i, xv in x.items():
            for j, yv in y.items():
                terms = pair.get((i, j))
                if not terms:
                    continue
                s = xv * yv
                for k, cv in terms:
                    acc = out.get(k, ZERO) + s * cv
                    if acc:
                        out[k] = acc
                    elif k in out:
                        del out[k]
        return out

    def multiply(self, x: Vector, y: Vector) -> Vector:
        if x.dim != self.dim or y.dim != self.dim:
            raise DimensionMismatch("vector dim != algebra dim")
        return Vector(self.dim, self.multiply_raw(x.entries, y.entries))

    def associator(self, x: Vector, y: Vector, z: Vector) -> Vector:
        """(x*y)*z - x*(y*z)."""
        return self.multiply(self.multiply(x, y), z) - self.multiply(x, self.multiply(y, z))

    def left_mult_matrix(self, i: int) -> Matrix:
        """Matrix of v -> e_i * v."""
        return Matrix(
            self.dim,
            self.dim,
            {(k, j): v for (ii, j, k), v in self.c.entries.items() if ii == i},
        )

    def right_mult_matrix(self, i: int) -> Matrix:
        """Matrix of v -> v * e_i."""
        return Matrix(
            self.dim,
            self.dim,
            {(k, j): v for (j, ii, k), v in self.c.entries.items() if ii == i},
        )

    def opposite(self) -> "AlgebraTable":
        """Arguments swapped: x *' y = y * x."""
        return AlgebraTable(
            self.dim,
            self.basis_labels,
            Tensor3(
                self.dim,
                self.dim,
                self.dim,
                {(j, i, k): v for (i, j, k), v in self.c.entries.items()},
            ),
        )

    def symmetrize(self) -> "AlgebraTable":
        """{x, y} = x*y + y*x."""
        out: dict[tuple[int, int, int], Fraction] = {}
        for (i, j, k), v in self.c.entries.items():
            out[(i, j, k)] = out.get((i, j, k), ZERO) + v
            out[(j, i, k)] = out.get((j, i, k), ZERO) + v
        return AlgebraTable(self.dim, self.basis_labels, Tensor3(self.dim, self.dim, self.dim, out))

    def commutator(self) -> "AlgebraTable":
        """[x, y] = x*y - y*x."""
        out: dict[tuple[int, int, int], Fraction] = {}
        for (i, j, k), v in self.c.entries.items():
            out[(i, j, k)] = out.get((i, j, k), ZERO) + v
            out[(j, i, k)] = out.get((j, i, k), ZERO) - v
        return AlgebraTable(self.dim, self.basis_labels, Tensor3(self.dim, self.dim, self.dim, out))


def algebra_from_entries(
    dim: int,
    entries: Iterable[tuple[int, int, int, Fraction]],
    basis_labels: Iterable[str] | None = None,
) -> AlgebraTable:
    labels = tuple(basis_labels) if basis_labels is not None else tuple(f"e{i}" for i in range(dim))
    data: dict[tuple[int, int, int], Fraction] = {}
    for i, j, k, v in entries:
        key = (i, j, k)
        if key in data:
            raise ValueError(f"duplicate structure entry {key}")
        data[key] = v
    return AlgebraTable(dim, labels, Tensor3(dim, dim, dim, data))


def direct_sum(a: AlgebraTable, b: AlgebraTable) -> AlgebraTable:
    """Block-diagonal product table on the concatenated bases."""
    n = a.dim
    entries = dict(a.c.entries)
    for (i, j, k), v in b.c.entries.items():
        entries[(n + i, n + j, n + k)] = v
    return AlgebraTable(
        n + b.dim,
        a.basis_labels + b.basis_labels,
        Tensor3(n + b.dim, n + b.dim, n + b.dim, entries),
    )


def _residual_right(a: AlgebraTable, i: int, j: int, k: int) -> dict:
    # e_i*(e_j*e_k) - (e_i*e_j)*e_k - (e_j*e_i)*e_k, straight off the tensor
    ei, ej, ek = {i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)}
    out = a.multiply_raw(ei, a.multiply_raw(ej, ek))
    for term in (
        a.multiply_raw(a.multiply_raw(ei, ej), ek),
        a.multiply_raw(a.multiply_raw(ej, ei), ek),
    ):
        for m, v in term.items():
            acc = out.get(m, ZERO) - v
            if acc:
                out[m] = acc
            elif m in out:
                del out[m]
    return out


def _residual_left(a: AlgebraTable, i: int, j: int, k: int) -> dict:
    # (e_i*e_j)*e_k - e_i*(e_j*e_k) - e_i*(e_k*e_j)
    ei, ej, ek = {i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)}
    out = a.multiply_raw(a.multiply_raw(ei, ej), ek)
    for term in (
        a.multiply_raw(ei, a.multiply_raw(ej, ek)),
        a.multiply_raw(ei, a.multiply_raw(ek, ej)),
    ):
        for m, v in term.items():
            acc = out.get(m, ZERO) - v
            if acc:
                out[m] = acc
            elif m in out:
                del out[m]
    return out


def right_zinbiel_residuals(a: AlgebraTable, first_only: bool = False) -> list:
    """Hard-coded check of x*(y*z) = (x*y)*z + (y*x)*z on all basis triples.

    Independent of the identity DSL; used to cross-check the engine.
    Returns [(triple, residual dict), ...] in lexicographic triple order.
    """
    out = []
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                r = _residual_right(a, i, j, k)
                if r:
                    out.append(((i, j, k), r))
                    if first_only:
                        return out
    return out


def left_zinbiel_residuals(a: AlgebraTable, first_only: bool = False) -> list:
    """Hard-coded check of (x*y)*z = x*(y*z) + x*(z*y) on all basis triples."""
    out = []
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                r = _residual_left(a, i, j, k)
                if r:
                    out.append(((i, j, k), r))
                    if first_only:
                        return out
    return out
