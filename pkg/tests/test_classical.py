import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slmtangle.classical import (
    ClassicalVector,
    cap_vector,
    check_equivariance,
    classical_apply,
    classical_cross,
    classical_dumbbell,
    compare_at_q1,
    dual_basis,
    random_word,
    wedge_action,
)
from slmtangle.diagram import Cap, Cross, Cup, Dumbbell, StrandSeq, TangleWord, braid_closure


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("order", ["lr", "rl"])
@pytest.mark.parametrize("i", [1, 2])
def test_cap_image_is_invariant(m, order, i):
    assert check_equivariance(m, i, order) is None


def test_perturbed_cap_is_caught():
    bad = cap_vector(3).copy()
    bad[0, 2] *= -1
    assert check_equivariance(3, vector=bad) == "e1"


def test_wedge_action_is_a_representation():
    rng = np.random.default_rng(7)
    x, y = rng.integers(-3, 4, (4, 4)), rng.integers(-3, 4, (4, 4))
    wx, _ = wedge_action(x, 3)
    wy, _ = wedge_action(y, 3)
    wxy, _ = wedge_action(x @ y - y @ x, 3)
    assert np.array_equal(wx @ wy - wy @ wx, wxy)


def test_dual_basis_is_a_permutation():
    for m in (2, 3, 4, 5):
        assert sorted(dual_basis(m)) == list(range(m))


def _matrix(gens, seq):
    m, n = seq.m, len(seq)
    cols = []
    for idx in np.ndindex(*(m,) * n):
        cols.append(classical_apply(ClassicalVector.basis(seq, idx), gens).data.reshape(-1))
    return np.array(cols).T


@pytest.mark.parametrize("m", [2, 3, 4])
def test_symmetric_group_relations(m):
    seq = StrandSeq(m, (1, 1, 1))
    s1, s2 = _matrix([Cross(1, 1)], seq), _matrix([Cross(2, 1)], seq)
    ident = np.eye(m**3, dtype=np.int64)
    assert np.array_equal(s1 @ s1, ident)
    assert np.array_equal(s1 @ s2 @ s1, s2 @ s1 @ s2)
    u = _matrix([Dumbbell(1)], seq)
    assert np.array_equal(u, ident - s1)
    assert np.array_equal(u @ u, 2 * u)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_unlike_classical_cross_is_a_signed_swap(m):
    seq = StrandSeq(m, (1, m - 1))
    for a in range(m):
        for b in range(m):
            out = classical_cross(ClassicalVector.basis(seq, (a, b)), 1)
            expected = np.zeros((m, m), dtype=np.int64)
            expected[b, a] = (-1) ** (m - 1)
            assert np.array_equal(out.data, expected)


def test_classical_closed_values_are_dimensions():
    for m in (2, 3, 4):
        v = classical_apply(ClassicalVector.basis(StrandSeq(m), ()), braid_closure(2, [1, 1], m).gens)
        assert int(v.data) == m * m
        v = classical_apply(ClassicalVector.basis(StrandSeq(m), ()), (Cap(1), Cup(1)))
        assert int(v.data) == m


def test_dumbbell_vanishes_on_symmetric_tensors():
    seq = StrandSeq(3, (1, 1))
    data = np.ones((3, 3), dtype=np.int64)
    assert not classical_dumbbell(ClassicalVector(seq, data), 1).data.any()


@settings(max_examples=60)
@given(st.integers(2, 4), st.integers(0, 4), st.integers(0, 2**32 - 1))
def test_engine_agrees_with_oracle_at_q1(m, n, seed):
    rng = random.Random(seed)
    word = random_word(m, n, rng.randint(1, 6), rng)
    assert compare_at_q1(word).ok, str(compare_at_q1(word))


def test_compare_reports_the_first_mismatch(monkeypatch):
    import slmtangle.classical as cl

    monkeypatch.setattr(cl, "classical_dumbbell", lambda v, i: v)
    word = TangleWord(StrandSeq(2, (1, 1)), (Dumbbell(1),))
    report = cl.compare_at_q1(word)
    assert not report.ok
    assert report.column == (0, 0) and (report.engine, report.classical) == (0, 1)
