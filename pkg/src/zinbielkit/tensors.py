"""Sparse exact-rational linear algebra: vectors, matrices, 3-index tensors.

Every coefficient is a `fractions.Fraction`, kept in lowest terms with a
positive denominator, so all computation in the package is exact and equality
is literal equality of reduced fractions.  Containers store only nonzero
entries and are treated as immutable after construction.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_SCALAR_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class DimensionMismatch(ValueError):
    """Raised when operand shapes are incompatible."""


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into an exact rational.

    Only integer/fraction literals are accepted (no floats, no whitespace).
    """
    if not isinstance(text, str) or not _SCALAR_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_scalar(value: Fraction) -> str:
    """Inverse of :func:`parse_scalar`: reduced ``"p/q"`` with q > 0, or ``"p"``."""
    return str(value)


def _clean(entries: Mapping) -> dict:
    return {k: v for k, v in entries.items() if v != 0}


@dataclass(frozen=True)
class Vector:
    """Sparse vector over the rationals; ``entries`` maps index -> coefficient."""

    dim: int
    entries: dict

    def __post_init__(self):
        object.__setattr__(self, "entries", _clean(self.entries))
        for i in self.entries:
            if not 0 <= i < self.dim:
                raise DimensionMismatch(f"index {i} out of range for dim {self.dim}")

    @classmethod
    def zero(cls, dim: int) -> "Vector":
        return cls(dim, {})

    @classmethod
    def basis(cls, dim: int, k: int) -> "Vector":
        return cls(dim, {k: ONE})

    def get(self, i: int) -> Fraction:
        return self.entries.get(i, ZERO)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self.entries.items()))

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def _check(self, other: "Vector"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dims {self.dim} != {other.dim}")

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        out = dict(self.entries)
        for i, v in other.entries.items():
            out[i] = out.get(i, ZERO) + v
        return Vector(self.dim, out)

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def __neg__(self) -> "Vector":
        return Vector(self.dim, {i: -v for i, v in self.entries.items()})

    def scale(self, s: Fraction) -> "Vector":
        return Vector(self.dim, {i: s * v for i, v in self.entries.items()})


@dataclass(frozen=True)
class Matrix:
    """Sparse matrix; ``entries`` maps (row, col) -> coefficient."""

    rows: int
    cols: int
    entries: dict

    def __post_init__(self):
        object.__setattr__(self, "entries", _clean(self.entries))
        for r, c in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise DimensionMismatch(
                    f"entry ({r},{c}) out of range for {self.rows}x{self.cols}"
                )

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, {(i, i): ONE for i in range(n)})

    def get(self, r: int, c: int) -> Fraction:
        return self.entries.get((r, c), ZERO)

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return iter(sorted(self.entries.items()))

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, ZERO) + v
        return Matrix(self.rows, self.cols, out)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def scale(self, s: Fraction) -> "Matrix":
        return Matrix(self.rows, self.cols, {k: s * v for k, v in self.entries.items()})

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ")
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (k, c), v in other.entries.items():
            by_row.setdefault(k, []).append((c, v))
        out: dict[tuple[int, int], Fraction] = {}
        for (r, k), v1 in self.entries.items():
            for c, v2 in by_row.get(k, ()):
                key = (r, c)
                out[key] = out.get(key, ZERO) + v1 * v2
        return Matrix(self.rows, other.cols, out)

    def apply(self, v: Vector) -> Vector:
        if self.cols != v.dim:
            raise DimensionMismatch("matrix/vector dims differ")
        return Vector(self.rows, self.apply_raw(v.entries))

    def apply_raw(self, coeffs: Mapping[int, Fraction]) -> dict:
        out: dict[int, Fraction] = {}
        for (r, c), v in self.entries.items():
            x = coeffs.get(c)
            if x is not None:
                out[r] = out.get(r, ZERO) + v * x
        return {k: v for k, v in out.items() if v != 0}

    def column(self, c: int) -> Vector:
        return Vector(self.rows, {r: v for (r, cc), v in self.entries.items() if cc == c})


def linear_combination(family: Iterable[Matrix], coeffs: Mapping[int, Fraction]) -> Matrix:
    """Coefficient-weighted sum of a matrix family (linear extension of an action)."""
    family = list(family)
    if not family:
        raise ValueError("empty matrix family")
    out: dict[tuple[int, int], Fraction] = {}
    for i, s in coeffs.items():
        for k, v in family[i].entries.items():
            out[k] = out.get(k, ZERO) + s * v
    return Matrix(family[0].rows, family[0].cols, out)


def rank(m: Matrix) -> int:
    """Exact rank over the rationals by Bareiss fraction-free elimination.

    Denominators are cleared row-wise first (rank-preserving), then the
    elimination runs entirely in arbitrary-precision integers.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    a: list[list[int]] = []
    for r in range(m.rows):
        row = [m.get(r, c) for c in range(m.cols)]
        scale = 1
        for q in row:
            scale = scale * q.denominator // math.gcd(scale, q.denominator)
        a.append([int(q * scale) for q in row])
    nrows, ncols = m.rows, m.cols
    r = 0
    prev = 1
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols):
                a[i][j] = (a[i][j] * a[r][col] - a[i][col] * a[r][j]) // prev
            a[i][col] = 0
        prev = a[r][col]
        r += 1
    return r


@dataclass(frozen=True)
class Tensor3:
    """Sparse 3-index tensor; ``entries`` maps (i, j, k) -> coefficient."""

    d0: int
    d1: int
    d2: int
    entries: dict

    def __post_init__(self):
        object.__setattr__(self, "entries", _clean(self.entries))
        for i, j, k in self.entries:
            if not (0 <= i < self.d0 and 0 <= j < self.d1 and 0 <= k < self.d2):
                raise DimensionMismatch(
                    f"entry ({i},{j},{k}) out of range for "
                    f"{self.d0}x{self.d1}x{self.d2}"
                )

    @classmethod
    def zero(cls, d0: int, d1: int, d2: int) -> "Tensor3":
        return cls(d0, d1, d2, {})

    def get(self, i: int, j: int, k: int) -> Fraction:
        return self.entries.get((i, j, k), ZERO)

    def items(self) -> Iterator[tuple[tuple[int, int, int], Fraction]]:
        return iter(sorted(self.entries.items()))

    @property
    def is_zero(self) -> bool:
        return not self.entries
