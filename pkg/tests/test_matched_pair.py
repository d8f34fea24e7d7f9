"""Matched pairs: compatibility checks, the double, induced pair structures."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zinbielkit import fuzz
from zinbielkit.algebra import algebra_from_entries, direct_sum, right_zinbiel_residuals
from zinbielkit.bimodule import regular_bimodule, semidirect_sum
from zinbielkit.matched_pair import (
    MatchedPair,
    check_matched_pair,
    double,
    format_violation,
    induced_commassoc_pair,
    induced_lie_pair,
    zero_matched_pair,
)
from zinbielkit.tensors import DimensionMismatch, Matrix


@pytest.fixture(scope="module")
def t2():
    from zinbielkit import trunc_integration

    return trunc_integration(2, "right")


def _regular_as_pair(a):
    b = regular_bimodule(a)
    zero_table = algebra_from_entries(a.dim, [])
    zn = Matrix.zero(a.dim, a.dim)
    return b, MatchedPair(a, zero_table, b.left_maps, b.right_maps, (zn,) * a.dim, (zn,) * a.dim)


def test_zero_pair_passes_and_doubles_to_direct_sum(t3, t2):
    mp = zero_matched_pair(t3, t2)
    assert check_matched_pair(mp) == []
    d = double(mp)
    assert d.dim == t3.dim + t2.dim
    assert d.basis_labels == t3.basis_labels + ("f0", "f1", "f2")
    assert d.c.entries == direct_sum(t3, t2).c.entries
    assert right_zinbiel_residuals(d) == []


def test_regular_bimodule_as_pair_doubles_to_semidirect(t3):
    b, mp = _regular_as_pair(t3)
    assert check_matched_pair(mp) == []
    assert double(mp).c.entries == semidirect_sum(b).c.entries


def test_broken_base_reported_first(l3, t2):
    viols = check_matched_pair(zero_matched_pair(l3, t2))
    first = viols[0]
    assert first.condition == "base_a_right_zinbiel"
    assert first.where == (0, 1, 0)
    assert dict(first.residual) == {1: Fraction(-1)}
    assert format_violation(first) == "base_a_right_zinbiel at (0,1,0): residual -e1"


def test_broken_action_reported_with_matrix_residual(t3, t2):
    la = [Matrix.zero(t2.dim, t2.dim)] * t3.dim
    la[0] = Matrix(t2.dim, t2.dim, {(0, 0): Fraction(1)})
    zn = Matrix.zero(t3.dim, t3.dim)
    mp = MatchedPair(
        t3, t2, tuple(la), (Matrix.zero(t2.dim, t2.dim),) * t3.dim, (zn,) * t2.dim, (zn,) * t2.dim
    )
    viols = check_matched_pair(mp)
    assert sorted({v.condition for v in viols}) == [
        "action_on_b:left_composition",
        "compat_la_1",
        "compat_la_2",
    ]
    assert format_violation(viols[0]) == "action_on_b:left_composition at (0,0): residual [0,0]=1"
    assert right_zinbiel_residuals(double(mp))


def test_check_matches_double_across_family(matched_pair_family):
    for _, mp in matched_pair_family[:80]:
        pair_ok = not check_matched_pair(mp)
        double_ok = not right_zinbiel_residuals(double(mp))
        assert pair_ok == double_ok


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers())
def test_random_pair_check_matches_double(na, nb, seed):
    rng = random.Random(seed)
    mp = fuzz.random_matched_pair(rng, na, nb)
    assert (not check_matched_pair(mp)) == (not right_zinbiel_residuals(double(mp)))


def test_double_mixed_blocks(t3, t2):
    rng = random.Random(7)
    mp = MatchedPair(
        t3,
        t2,
        fuzz.random_maps(rng, t3.dim, t2.dim),
        fuzz.random_maps(rng, t3.dim, t2.dim),
        fuzz.random_maps(rng, t2.dim, t3.dim),
        fuzz.random_maps(rng, t2.dim, t3.dim),
    )
    d = double(mp)
    n, p = t3.dim, t2.dim
    for i in range(n):
        for beta in range(p):
            want = {m: v for m, v in mp.rb[beta].column(i).entries.items()}
            for m, v in mp.la[i].column(beta).entries.items():
                want[n + m] = want.get(n + m, Fraction(0)) + v
            assert d.product_basis(i, n + beta) == {k: v for k, v in want.items() if v}
            want = {m: v for m, v in mp.lb[beta].column(i).entries.items()}
            for m, v in mp.ra[i].column(beta).entries.items():
                want[n + m] = want.get(n + m, Fraction(0)) + v
            assert d.product_basis(n + beta, i) == {k: v for k, v in want.items() if v}


def test_induced_commassoc_pair_holds_on_zero_pair(t3, t2):
    bundle = induced_commassoc_pair(zero_matched_pair(t3, t2))
    assert bundle.kind == "commutative_associative_pair"
    assert bundle.holds
    assert [v.name for v in bundle.verdicts] == [
        "g_commutative",
        "g_associative",
        "h_commutative",
        "h_associative",
        "mu_representation",
        "rho_representation",
        "compat_mu",
        "compat_rho",
    ]


def test_induced_lie_pair_truncation_threshold(t3, t5, t2):
    # commutator brackets of the truncated tables only break Jacobi once
    # degree 5 exists: dim 4 passes, dim 6 fails with the 1/30 coefficient
    assert induced_lie_pair(zero_matched_pair(t3, t2)).holds
    bundle = induced_lie_pair(zero_matched_pair(t5, t2))
    assert not bundle.holds
    failing = [v for v in bundle.verdicts if not v.holds]
    assert [v.name for v in failing] == ["g_jacobi"]
    first = failing[0].witness_data["failures"][0]
    assert first["tuple"] == [0, 1, 2]
    assert first["residual"] == [[5, "-1/30"]]


def test_constructor_rejects_bad_shapes(t3, t2):
    zp = Matrix.zero(t2.dim, t2.dim)
    zn = Matrix.zero(t3.dim, t3.dim)
    with pytest.raises(DimensionMismatch):
        MatchedPair(t3, t2, (zp,) * 3, (zp,) * t3.dim, (zn,) * t2.dim, (zn,) * t2.dim)
    with pytest.raises(DimensionMismatch):
        MatchedPair(t3, t2, (zn,) * t3.dim, (zp,) * t3.dim, (zn,) * t2.dim, (zn,) * t2.dim)
    with pytest.raises(DimensionMismatch):
        MatchedPair(t3, t2, (zp,) * t3.dim, (zp,) * t3.dim, (zp,) * t2.dim, (zn,) * t2.dim)
