"""Coalgebras by coproduct tensor, and the transpose bridge to product tables.

A ``CoalgebraTable`` stores d[k][i][j] meaning Delta(e_k) = sum d_k^{ij}
e_i (x) e_j.  Checks expand compositions like (id (x) Delta) o Delta into
exact 3-leg tensors per basis vector; a violation is the basis index plus
the residual 3-tensor.

``dualize`` transposes a product table into a coproduct table via
d[k][i][j] = c[i][j][k]; this makes the right-orientation coalgebra check on
dualize(A) carry exactly the same residual coefficients as the
right-orientation check on A, which the tests assert entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraTable, algebra_from_entries
from .reports import Verdict, VerdictBundle, format_scalar
from .tensors import Tensor3

Pairs = dict[tuple[int, int], Fraction]
Triples = dict[tuple[int, int, int], Fraction]


@dataclass(frozen=True)
class CoalgebraTable:
    dim: int
    d: Tensor3  # d[k][i][j]: coefficient of e_i (x) e_j in Delta(e_k)

    def __post_init__(self):
        if (self.d.d0, self.d.d1, self.d.d2) != (self.dim,) * 3:
            raise ValueError("coproduct tensor shape must be dim x dim x dim")

    def coproduct_basis(self, k: int) -> Pairs:
        out: Pairs = {}
        for (kk, i, j), v in self.d.entries.items():
            if kk == k:
                out[(i, j)] = v
        return out

    @property
    def is_zero(self) -> bool:
        return not self.d.entries


def coalgebra_from_entries(dim: int, entries) -> CoalgebraTable:
    seen: Triples = {}
    for k, i, j, v in entries:
        key = (k, i, j)
        if key in seen:
            raise ValueError(f"duplicate coproduct entry for {key}")
        seen[key] = Fraction(v)
    return CoalgebraTable(dim, Tensor3(dim, dim, dim, seen))


def opposite_coproduct(c: CoalgebraTable) -> CoalgebraTable:
    swapped = {(k, j, i): v for (k, i, j), v in c.d.entries.items()}
    return CoalgebraTable(c.dim, Tensor3(c.dim, c.dim, c.dim, swapped))


def sym_coproduct(c: CoalgebraTable) -> CoalgebraTable:
    return _combine(c, Fraction(1))


def antisym_coproduct(c: CoalgebraTable) -> CoalgebraTable:
    return _combine(c, Fraction(-1))


def _combine(c: CoalgebraTable, sign: Fraction) -> CoalgebraTable:
    acc: Triples = dict(c.d.entries)
    for (k, i, j), v in c.d.entries.items():
        key = (k, j, i)
        s = acc.get(key, Fraction(0)) + sign * v
        if s:
            acc[key] = s
        elif key in acc:
            del acc[key]
    return CoalgebraTable(c.dim, Tensor3(c.dim, c.dim, c.dim, acc))


def dualize(a: AlgebraTable) -> CoalgebraTable:
    entries = {(k, i, j): v for (i, j, k), v in a.c.entries.items()}
    return CoalgebraTable(a.dim, Tensor3(a.dim, a.dim, a.dim, entries))


def dualize_co(c: CoalgebraTable) -> AlgebraTable:
    return algebra_from_entries(
        c.dim, [(i, j, k, v) for (k, i, j), v in c.d.entries.items()]
    )


# -- composition calculus ----------------------------------------------------
#
# A composite like (tau (x) id) o (Delta (x) id) o (tau o Delta) is evaluated
# per basis vector: start from the 2-leg tensor of the inner coproduct, expand
# one leg with a coproduct, then permute legs.  All tensors are sparse dicts.


def _delta(c: CoalgebraTable, k: int, *, swap: bool = False) -> Pairs:
    out: Pairs = {}
    for (kk, i, j), v in c.d.entries.items():
        if kk == k:
            out[(j, i) if swap else (i, j)] = v
    return out


def _expand0(two: Pairs, c: CoalgebraTable, *, swap: bool = False) -> Triples:
    """Apply Delta (or tau o Delta) to the first leg: (F (x) id)."""
    out: Triples = {}
    for (m, j), v in two.items():
        for (i, i2), w in _delta(c, m, swap=swap).items():
            key = (i, i2, j)
            s = out.get(key, Fraction(0)) + v * w
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def _expand1(two: Pairs, c: CoalgebraTable, *, swap: bool = False) -> Triples:
    """Apply Delta (or tau o Delta) to the second leg: (id (x) F)."""
    out: Triples = {}
    for (i, m), v in two.items():
        for (j, l), w in _delta(c, m, swap=swap).items():
            key = (i, j, l)
            s = out.get(key, Fraction(0)) + v * w
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def _swap01(t: Triples) -> Triples:
    return {(j, i, l): v for (i, j, l), v in t.items()}


def _swap12(t: Triples) -> Triples:
    return {(i, l, j): v for (i, j, l), v in t.items()}


def _sub3(lhs: Triples, *others: Triples) -> Triples:
    out = dict(lhs)
    for other in others:
        for key, v in other.items():
            s = out.get(key, Fraction(0)) - v
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def _add3(*parts: Triples) -> Triples:
    out: Triples = {}
    for part in parts:
        for key, v in part.items():
            s = out.get(key, Fraction(0)) + v
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


@dataclass(frozen=True)
class CoalgebraViolation:
    basis_index: int
    residual: Triples


def format_triples(t: Triples, symbol: str = "e") -> str:
    if not t:
        return "0"
    parts = []
    for idx, ((i, j, l), v) in enumerate(sorted(t.items())):
        mag = abs(v)
        body = f"{symbol}{i}*{symbol}{j}*{symbol}{l}"
        if mag != 1:
            body = f"({format_scalar(mag)}){body}"
        if idx == 0:
            parts.append(body if v > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if v > 0 else '-'} {body}")
    return " ".join(parts)


def triples_jsonable(t: Triples) -> list:
    return [[i, j, l, format_scalar(v)] for (i, j, l), v in sorted(t.items())]


def check_co_right(c: CoalgebraTable, *, first_only: bool = False) -> list[CoalgebraViolation]:
    """(id (x) Delta) o Delta = (Delta (x) id) o Delta + ((tau o Delta) (x) id) o Delta."""
    out = []
    for k in range(c.dim):
        two = _delta(c, k)
        r = _sub3(_expand1(two, c), _expand0(two, c), _expand0(two, c, swap=True))
        if r:
            out.append(CoalgebraViolation(k, r))
            if first_only:
                break
    return out


def check_co_left(c: CoalgebraTable, *, first_only: bool = False) -> list[CoalgebraViolation]:
    """(Delta (x) id) o Delta = (id (x) Delta) o Delta + (id (x) (tau o Delta)) o Delta."""
    out = []
    for k in range(c.dim):
        two = _delta(c, k)
        r = _sub3(_expand0(two, c), _expand1(two, c), _expand1(two, c, swap=True))
        if r:
            out.append(CoalgebraViolation(k, r))
            if first_only:
                break
    return out


def _family_verdict(name: str, residual_per_basis) -> Verdict:
    for k, r in residual_per_basis:
        if r:
            text = f"at e{k}: residual = {format_triples(r)}"
            data = {"basis_index": k, "residual": triples_jsonable(r)}
            return Verdict(name, False, text, data)
    return Verdict(name, True)


def check_cocomm_coassoc(c: CoalgebraTable) -> VerdictBundle:
    """Delta = tau o Delta together with (Delta (x) id) o Delta = (id (x) Delta) o Delta."""

    def cocomm():
        for k in range(c.dim):
            two = _delta(c, k)
            swapped = _delta(c, k, swap=True)
            diff = dict(two)
            for key, v in swapped.items():
                s = diff.get(key, Fraction(0)) - v
                if s:
                    diff[key] = s
                elif key in diff:
                    del diff[key]
            # report 2-leg residual as a 3-leg dict with a padded last index
            yield k, {(i, j, 0): v for (i, j), v in diff.items() if v}

    def coassoc():
        for k in range(c.dim):
            two = _delta(c, k)
            yield k, _sub3(_expand0(two, c), _expand1(two, c))

    return VerdictBundle(
        "cocommutative_coassociative",
        (
            _family_verdict("cocommutative", cocomm()),
            _family_verdict("coassociative", coassoc()),
        ),
    )


def check_lie_coalgebra(c: CoalgebraTable) -> VerdictBundle:
    """Delta = -tau o Delta together with the three-term co-Jacobi identity."""

    def anti():
        for k in range(c.dim):
            acc = dict(_delta(c, k))
            for key, v in _delta(c, k, swap=True).items():
                s = acc.get(key, Fraction(0)) + v
                if s:
                    acc[key] = s
                elif key in acc:
                    del acc[key]
            yield k, {(i, j, 0): v for (i, j), v in acc.items() if v}

    def co_jacobi():
        # (id (x) Delta) o Delta + (id (x) tau) o (Delta (x) id) o Delta
        #   - (Delta (x) id) o Delta
        for k in range(c.dim):
            two = _delta(c, k)
            middle = _expand0(two, c)
            yield k, _sub3(_add3(_expand1(two, c), _swap12(middle)), middle)

    return VerdictBundle(
        "lie_coalgebra",
        (
            _family_verdict("antisymmetric", anti()),
            _family_verdict("co_jacobi", co_jacobi()),
        ),
    )


def check_aux_coalgebra_identities(c: CoalgebraTable) -> VerdictBundle:
    """The consequence identities of each coalgebra orientation, plus the three
    two-sided product identities stated for the right orientation.  All are
    evaluated unconditionally; which ones hold is part of the report."""

    def d(k):
        return _delta(c, k)

    def dt(k):
        return _delta(c, k, swap=True)

    def pairs(lhs_fn, rhs_fn):
        for k in range(c.dim):
            yield k, _sub3(lhs_fn(k), rhs_fn(k))

    # consequences of the right orientation
    # (id (x) Delta) o Delta = (tau (x) id) o (id (x) Delta) o Delta
    co_right_a = pairs(
        lambda k: _expand1(d(k), c),
        lambda k: _swap01(_expand1(d(k), c)),
    )
    # (id (x) Delta) o Delta = (tau (x) id) o (Delta (x) id) o (tau o Delta)
    co_right_b = pairs(
        lambda k: _expand1(d(k), c),
        lambda k: _swap01(_expand0(dt(k), c)),
    )
    # consequences of the left orientation
    # (Delta (x) id) o Delta = (id (x) tau) o (Delta (x) id) o Delta
    co_left_a = pairs(
        lambda k: _expand0(d(k), c),
        lambda k: _swap12(_expand0(d(k), c)),
    )
    # (Delta (x) id) o Delta = (id (x) tau) o (id (x) Delta) o (tau o Delta)
    co_left_b = pairs(
        lambda k: _expand0(d(k), c),
        lambda k: _swap12(_expand1(dt(k), c)),
    )
    # two-sided identities for the right orientation
    # (id (x) (tau o Delta)) o Delta
    #   = (id (x) tau) o (Delta (x) id) o Delta
    #   + (tau (x) id) o (id (x) (tau o Delta)) o (tau o Delta)
    def shared_rhs(k):
        return _add3(
            _swap12(_expand0(d(k), c)),
            _swap01(_expand1(dt(k), c, swap=True)),
        )

    co_derived_1 = pairs(lambda k: _expand1(d(k), c, swap=True), shared_rhs)
    # (Delta (x) id) o (tau o Delta) = the same right-hand side
    co_derived_2 = pairs(lambda k: _expand0(dt(k), c), shared_rhs)
    # ((tau o Delta) (x) id) o (tau o Delta)
    #   = (id (x) Delta) o (tau o Delta) + (id (x) (tau o Delta)) o (tau o Delta)
    co_derived_3 = pairs(
        lambda k: _expand0(dt(k), c, swap=True),
        lambda k: _add3(_expand1(dt(k), c), _expand1(dt(k), c, swap=True)),
    )

    return VerdictBundle(
        "aux_coalgebra_identities",
        (
            _family_verdict("co_right_relation_a", co_right_a),
            _family_verdict("co_right_relation_b", co_right_b),
            _family_verdict("co_left_relation_a", co_left_a),
            _family_verdict("co_left_relation_b", co_left_b),
            _family_verdict("co_derived_1", co_derived_1),
            _family_verdict("co_derived_2", co_derived_2),
            _family_verdict("co_derived_3", co_derived_3),
        ),
    )


def gap_counterexample() -> CoalgebraTable:
    """Coproduct whose symmetrization is zero (so trivially cocommutative and
    coassociative) while the coproduct itself passes neither orientation."""
    return coalgebra_from_entries(2, [(0, 0, 1, 1), (0, 1, 0, -1)])
