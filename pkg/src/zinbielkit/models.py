"""Concrete model algebras used throughout the test and audit suites.

Three families:

* truncated monomial calculus on the basis 1, X, ..., X^n, in two
  orientations: ``right`` is a*b = b * (integral of a), ``left`` is
  a o b = integral of (b * da/dX); products whose degree exceeds n are
  truncated to zero;
* the free half-shuffle algebra on words up to a length cap, where
  u*v shuffles u with v minus its last letter and reattaches that letter;
* tiny degenerate tables (zero products, one idempotent) used as controls.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .algebra import AlgebraTable, algebra_from_entries


def trunc_integration(n: int, orientation: str) -> AlgebraTable:
    """Monomial calculus table of dimension n+1 (basis X^0 .. X^n).

    right: X^i * X^j = 1/(i+1) X^(i+j+1)      when i+j+1 <= n
    left:  X^i o X^j = i/(i+j) X^(i+j), i>=1  when i+j   <= n
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    labels = tuple("1" if i == 0 else ("X" if i == 1 else f"X^{i}") for i in range(n + 1))
    entries = []
    if orientation == "right":
        for i in range(n + 1):
            for j in range(n + 1):
                if i + j + 1 <= n:
                    entries.append((i, j, i + j + 1, Fraction(1, i + 1)))
    elif orientation == "left":
        for i in range(1, n + 1):
            for j in range(n + 1):
                if i + j <= n:
                    entries.append((i, j, i + j, Fraction(i, i + j)))
    else:
        raise ValueError(f"orientation must be 'left' or 'right', got {orientation!r}")
    return algebra_from_entries(n + 1, entries, labels)


def _shuffles(u: tuple, v: tuple):
    """Yield all interleavings of u and v, with multiplicity."""
    if not u:
        yield v
        return
    if not v:
        yield u
        return
    for rest in _shuffles(u[1:], v):
        yield (u[0],) + rest
    for rest in _shuffles(u, v[1:]):
        yield (v[0],) + rest


def free_halfshuffle(letters: int, max_len: int) -> AlgebraTable:
    """Half-shuffle product on nonempty words of length <= max_len.

    u * v = sum of (w . last(v)) over shuffles w of u with v[:-1]; words
    longer than max_len are truncated to zero.  Basis order: by length,
    then lexicographically.
    """
    if not 1 <= letters <= 26:
        raise ValueError("letters must be between 1 and 26")
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    alphabet = "abcdefghijklmnopqrstuvwxyz"[:letters]
    words: list[tuple] = []
    for length in range(1, max_len + 1):
        words.extend(product(alphabet, repeat=length))
    index = {w: i for i, w in enumerate(words)}
    entries: dict[tuple[int, int, int], Fraction] = {}
    for u in words:
        for v in words:
            if len(u) + len(v) > max_len:
                continue
            tail = v[-1]
            for w in _shuffles(u, v[:-1]):
                key = (index[u], index[v], index[w + (tail,)])
                entries[key] = entries.get(key, Fraction(0)) + 1
    labels = ["".join(w) for w in words]
    return algebra_from_entries(
        len(words), [(i, j, k, v) for (i, j, k), v in entries.items()], labels
    )


def trivial_models() -> list[tuple[str, AlgebraTable]]:
    """Zero algebras of dimension 0..3 plus a one-dimensional idempotent.

    The idempotent table (e0*e0 = e0) fails both Zinbiel orientations and
    serves as a negative control.
    """
    out = [(f"zero:{d}", algebra_from_entries(d, [])) for d in range(4)]
    out.append(("idempotent:1", algebra_from_entries(1, [(0, 0, 0, Fraction(1))])))
    return out
