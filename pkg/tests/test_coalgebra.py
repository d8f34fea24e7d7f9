"""Coproduct tables: orientation checks, the transpose bridge, induced structures."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zinbielkit import fuzz
from zinbielkit.algebra import left_zinbiel_residuals, right_zinbiel_residuals
from zinbielkit.coalgebra import (
    CoalgebraTable,
    antisym_coproduct,
    check_aux_coalgebra_identities,
    check_co_left,
    check_co_right,
    check_cocomm_coassoc,
    check_lie_coalgebra,
    coalgebra_from_entries,
    dualize,
    dualize_co,
    format_triples,
    gap_counterexample,
    opposite_coproduct,
    sym_coproduct,
)
from zinbielkit.tensors import Tensor3


def _by_basis(residuals):
    """Regroup algebra residuals [(triple, {k: v})] as {k: {triple: v}}."""
    out = {}
    for triple, r in residuals:
        for k, v in r.items():
            out.setdefault(k, {})[triple] = v
    return out


def test_dualize_round_trips(t3):
    c = dualize(t3)
    assert dualize_co(c).c.entries == t3.c.entries
    assert dualize(dualize_co(c)).d.entries == c.d.entries


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 4), st.integers())
def test_dualize_round_trips_random(dim, seed):
    rng = random.Random(seed)
    a = fuzz.random_algebra(rng, dim)
    assert dualize_co(dualize(a)).c.entries == a.c.entries
    c = fuzz.random_coalgebra(rng, dim)
    assert dualize(dualize_co(c)).d.entries == c.d.entries


def test_dual_of_right_model_is_right_oriented(t3):
    c = dualize(t3)
    assert check_co_right(c) == []
    viols = check_co_left(c)
    assert [v.basis_index for v in viols] == [2, 3]
    assert dict(viols[0].residual) == {(0, 0, 0): Fraction(-3, 2)}


def test_transpose_bridge_carries_residuals_exactly(l3):
    c = dualize(l3)
    got = {v.basis_index: dict(v.residual) for v in check_co_right(c)}
    assert got == _by_basis(right_zinbiel_residuals(l3))
    got = {v.basis_index: dict(v.residual) for v in check_co_left(c)}
    assert got == _by_basis(left_zinbiel_residuals(l3))


def test_transpose_bridge_across_family(algebra_family):
    for _, a in algebra_family[:60]:
        c = dualize(a)
        assert (not check_co_right(c)) == (not right_zinbiel_residuals(a))
        assert (not check_co_left(c)) == (not left_zinbiel_residuals(a))


def test_opposite_coproduct_swaps_orientations(t3):
    c = dualize(t3)
    op = opposite_coproduct(c)
    assert check_co_left(op) == []
    assert len(check_co_right(op)) == len(check_co_left(c)) == 2
    assert opposite_coproduct(op).d.entries == c.d.entries


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.integers())
def test_sym_antisym_parts(dim, seed):
    c = fuzz.random_coalgebra(random.Random(seed), dim)
    sym, anti = sym_coproduct(c), antisym_coproduct(c)
    for k in range(dim):
        base = c.coproduct_basis(k)
        flipped = {(j, i): v for (i, j), v in base.items()}
        for key in set(base) | set(flipped):
            s = base.get(key, Fraction(0)) + flipped.get(key, Fraction(0))
            d = base.get(key, Fraction(0)) - flipped.get(key, Fraction(0))
            assert sym.coproduct_basis(k).get(key, Fraction(0)) == s
            assert anti.coproduct_basis(k).get(key, Fraction(0)) == d
    assert antisym_coproduct(sym).is_zero
    assert sym_coproduct(anti).is_zero


def test_cocommutativity_of_symmetrized_dual(t3, l3):
    assert not check_cocomm_coassoc(dualize(t3)).verdict_for("cocommutative").holds
    assert check_cocomm_coassoc(sym_coproduct(dualize(t3))).holds
    # the symmetrized left table is commutative but not associative, and the
    # dual side mirrors that split exactly
    bundle = check_cocomm_coassoc(sym_coproduct(dualize(l3)))
    assert bundle.verdict_for("cocommutative").holds
    v = bundle.verdict_for("coassociative")
    assert not v.holds
    assert v.witness_text == "at e1: residual = -e0*e0*e1 + e1*e0*e0"


def test_co_jacobi_mirrors_truncation_threshold(t3, t5):
    assert check_lie_coalgebra(antisym_coproduct(dualize(t3))).holds
    bundle = check_lie_coalgebra(antisym_coproduct(dualize(t5)))
    assert bundle.verdict_for("antisymmetric").holds
    v = bundle.verdict_for("co_jacobi")
    assert not v.holds
    assert v.witness_data == {
        "basis_index": 5,
        "residual": [
            [0, 1, 2, "-1/30"],
            [0, 2, 1, "1/30"],
            [1, 0, 2, "1/30"],
            [1, 2, 0, "-1/30"],
            [2, 0, 1, "-1/30"],
            [2, 1, 0, "1/30"],
        ],
    }


def test_gap_counterexample_separates_the_notions():
    gap = gap_counterexample()
    assert check_co_right(gap) and check_co_left(gap)
    assert sym_coproduct(gap).is_zero
    assert check_cocomm_coassoc(sym_coproduct(gap)).holds
    assert check_lie_coalgebra(gap).holds


def test_aux_identities_on_dual_of_right_model(t3):
    bundle = check_aux_coalgebra_identities(dualize(t3))
    got = {v.name: v.holds for v in bundle.verdicts}
    assert got == {
        "co_right_relation_a": True,
        "co_right_relation_b": False,
        "co_left_relation_a": False,
        "co_left_relation_b": False,
        "co_derived_1": True,
        "co_derived_2": True,
        "co_derived_3": True,
    }


def test_integration_dual_coproduct_values(t3):
    c = dualize(t3)
    assert c.coproduct_basis(0) == {}
    assert c.coproduct_basis(2) == {(0, 1): Fraction(1), (1, 0): Fraction(1, 2)}


def test_first_only_stops_at_first_violation(t3):
    c = dualize(t3)
    assert check_co_left(c, first_only=True) == check_co_left(c)[:1]
    assert check_co_right(dualize(t3), first_only=True) == []


def test_construction_guards():
    with pytest.raises(ValueError):
        coalgebra_from_entries(2, [(0, 0, 1, 1), (0, 0, 1, 2)])
    with pytest.raises(ValueError):
        CoalgebraTable(2, Tensor3(2, 2, 1, {}))


def test_format_triples_rendering():
    assert format_triples({}) == "0"
    assert format_triples({(0, 1, 2): Fraction(-1, 30)}) == "-(1/30)e0*e1*e2"
    assert (
        format_triples({(0, 0, 0): Fraction(1), (1, 0, 2): Fraction(-2)})
        == "e0*e0*e0 - (2)e1*e0*e2"
    )
