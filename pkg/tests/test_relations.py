import itertools

import pytest

from slmtangle.diagram import Cap, Cross, Cup, StrandSeq
from slmtangle.ktheory import MatrixCapError
from slmtangle.laurent import ONE, ZERO, monomial
from slmtangle.relations import (
    FAMILIES,
    Relation,
    check,
    generate,
    iter_results,
    r3_is_isotopy,
    run_battery,
    sequences,
)


def _failures(summaries):
    return {f: s.failed for f, s in summaries.items() if s.failed}


def test_sequences_cover_all_label_patterns():
    assert len(sequences(2, 3)) == 1
    assert len(sequences(3, 3)) == 8


@pytest.mark.parametrize("m, max_n", [(3, 3), (4, 3)])
def test_small_battery_passes(m, max_n):
    summaries = run_battery(m, max_n)
    assert _failures(summaries) == {}
    assert sum(s.passed for s in summaries.values()) > 0


def test_m2_battery_fails_only_on_pitchfork():
    summaries = run_battery(2, 4)
    assert set(_failures(summaries)) == {"pitchfork"}


def test_flipped_cap_sign_breaks_r0():
    summaries = run_battery(3, 3, ["R0"], cap_sign=-1)
    assert summaries["R0"].failed > 0
    assert "differs by" in summaries["R0"].failures[0].error


def test_iter_results_is_deterministic():
    first = [(r.relation.describe(), r.ok) for r in iter_results(3, 3, ["R1", "pitchfork"])]
    second = [(r.relation.describe(), r.ok) for r in iter_results(3, 3, ["R1", "pitchfork"])]
    assert first == second and first


def test_check_reports_a_wrong_identity():
    seq = StrandSeq(3, (1, 1))
    rel = Relation("R2", seq, ((ONE, (Cross(1, 1),)),), ((ONE, ()),), "wrong on purpose")
    res = check(rel)
    assert not res.ok and res.error.startswith("entry row=")


def test_check_rejects_mismatched_boundaries():
    seq = StrandSeq(3, (1,))
    rel = Relation("R0", seq, ((ONE, (Cap(1),)),), ((ONE, ()),))
    assert not check(rel).ok


def test_matrix_cap_propagates():
    with pytest.raises(MatrixCapError):
        list(iter_results(4, 4, ["R3"], cap=100))


def test_every_family_is_instantiated_somewhere():
    seen = set()
    for m, n in [(2, 4), (3, 4), (4, 3)]:
        seen |= {rel.family for rel in generate(m, n)}
    assert seen == set(FAMILIES)


# R3: the two cyclic type patterns are different braids, so no identity is expected


def _burau(n, i, sign):
    t, ti = monomial(1), monomial(-1)
    mat = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    k = i - 1
    if sign > 0:
        block = [[ONE - t, t], [ONE, ZERO]]
    else:
        block = [[ZERO, ONE], [ti, ONE - ti]]
    for a, b in itertools.product(range(2), repeat=2):
        mat[k + a][k + b] = block[a][b]
    return mat


def _mul(x, y):
    n = len(x)
    return [[sum((x[r][k] * y[k][c] for k in range(n)), ZERO) for c in range(n)] for r in range(n)]


def _word(letters):
    out = [[ONE if r == c else ZERO for c in range(3)] for r in range(3)]
    for i, s in letters:
        out = _mul(out, _burau(3, i, s))
    return out


def _sign(t):
    return 1 if t == 1 else -1


def test_burau_separates_exactly_the_cyclic_triples():
    for l1, l2, l3 in itertools.product((1, 2), repeat=3):
        lhs = _word([(1, _sign(l3)), (2, _sign(l2)), (1, _sign(l1))])
        rhs = _word([(2, _sign(l1)), (1, _sign(l2)), (2, _sign(l3))])
        assert (lhs == rhs) == r3_is_isotopy(l1, l2, l3), (l1, l2, l3)


def test_burau_is_a_representation():
    for i, s in [(1, 1), (2, 1)]:
        assert _mul(_burau(3, i, s), _burau(3, i, -s)) == _word([])
    assert _word([(1, 1), (2, 1), (1, 1)]) == _word([(2, 1), (1, 1), (2, 1)])


def test_cyclic_triples_fail_in_the_engine_too():
    summaries = run_battery(3, 3, ["R3"], all_r3_triples=True)
    failing = {r.relation.note.split("types=")[1] for r in summaries["R3"].failures}
    assert failing == {"(1, 2, 1)", "(2, 1, 2)"}


def test_cup_then_cap_is_not_the_identity():
    # sanity: the battery is not trivially true
    seq = StrandSeq(3, (1, 2))
    rel = Relation("R0", seq, ((ONE, (Cup(1), Cap(1))),), ((ONE, ()),))
    assert not check(rel).ok
