"""Relation battery: tangle moves and MOY / Hecke identities as matrix equalities.

Each :class:`Relation` is an identity ``sum c_k [w_k] = sum d_k [v_k]``
between linear combinations of words sharing a bottom sequence.  Both
sides are materialized as :class:`~slmtangle.ktheory.OperatorMatrix` and
compared exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .diagram import (
    Cap,
    Cross,
    Cup,
    DiagramError,
    Dumbbell,
    Generator,
    StrandSeq,
    TangleWord,
    step,
    validate,
)
from .ktheory import DEFAULT_MATRIX_CAP, OperatorMatrix, operator_matrix
from .laurent import ONE, LaurentPoly, monomial, quantum_int

__all__ = [
    "Relation",
    "RelationResult",
    "FAMILIES",
    "MOVE_FAMILIES",
    "MOY_FAMILIES",
    "sequences",
    "generate",
    "check",
    "iter_results",
    "run_battery",
    "r3_is_isotopy",
    "FamilySummary",
]

Side = tuple[tuple[LaurentPoly, tuple[Generator, ...]], ...]


@dataclass(frozen=True)
class Relation:
    family: str
    bottom: StrandSeq
    lhs: Side
    rhs: Side
    note: str = ""

    def describe(self) -> str:
        return f"{self.family} m={self.bottom.m} bottom={self.bottom}" + (f" {self.note}" if self.note else "")


@dataclass
class RelationResult:
    relation: Relation
    ok: bool
    error: str | None = None


def _w(*gens: Generator) -> tuple[LaurentPoly, tuple[Generator, ...]]:
    return (ONE, tuple(gens))


def _scaled(c: LaurentPoly, *gens: Generator) -> tuple[LaurentPoly, tuple[Generator, ...]]:
    return (c, tuple(gens))


def sequences(m: int, n: int) -> list[StrandSeq]:
    labels = (1,) if m == 2 else (1, m - 1)
    return [StrandSeq(m, lab) for lab in itertools.product(labels, repeat=n)]


def _max_len(bottom: StrandSeq, gens: Sequence[Generator]) -> int:
    word = TangleWord(bottom, tuple(gens))
    return max(len(s) for s in word.sequences())


def _orders(m: int) -> tuple[str, ...]:
    return ("lr",) if m == 2 else ("lr", "rl")


def _order_for(m: int, left: int) -> str:
    return "lr" if left == 1 else "rl"


def _like(seq: StrandSeq, i: int) -> bool:
    return seq.label(i) == seq.label(i + 1)


# move families


def _r0(m, seq):
    n = len(seq)
    for i in range(1, n + 1):
        s = seq.label(i)
        # cap on the left of strand i, cup on its right
        yield Relation("R0", seq, (_w(Cap(i, _order_for(m, s)), Cup(i + 1)),), (_w(),), f"i={i} F^(i+1)G^i")
        # cap on the right, cup on the left
        yield Relation("R0", seq, (_w(Cap(i + 1, _order_for(m, m - s)), Cup(i)),), (_w(),), f"i={i} F^iG^(i+1)")


def _r1(m, seq):
    n = len(seq)
    for i in range(1, n + 1):
        s = seq.label(i)
        for t in (1, 2):
            # strand i, cap to its right, crossing with the left leg (like)
            yield Relation(
                "R1", seq, (_w(Cap(i + 1, _order_for(m, s)), Cross(i, t), Cup(i + 1)),), (_w(),),
                f"i={i} F^(i+1)T^i({t})G^(i+1)",
            )
            # cap to its left, crossing with the right leg (like)
            yield Relation(
                "R1", seq, (_w(Cap(i, _order_for(m, m - s)), Cross(i + 1, t), Cup(i)),), (_w(),),
                f"i={i} F^iT^(i+1)({t})G^i",
            )
            if m > 2:
                # kinks through an unlike crossing
                yield Relation(
                    "R1", seq, (_w(Cap(i + 1, _order_for(m, m - s)), Cross(i, t), Cup(i)),), (_w(),),
                    f"i={i} unlike F^iT^i({t})G^(i+1)",
                )
                yield Relation(
                    "R1", seq, (_w(Cap(i, _order_for(m, s)), Cross(i + 1, t), Cup(i + 1)),), (_w(),),
                    f"i={i} unlike F^(i+1)T^(i+1)({t})G^i",
                )


def _r2(m, seq):
    for i in range(1, len(seq)):
        kind = "like" if _like(seq, i) else "unlike"
        yield Relation("R2", seq, (_w(Cross(i, 1), Cross(i, 2)),), (_w(),), f"i={i} {kind} T(2)T(1)")
        yield Relation("R2", seq, (_w(Cross(i, 2), Cross(i, 1)),), (_w(),), f"i={i} {kind} T(1)T(2)")


def r3_is_isotopy(l1: int, l2: int, l3: int) -> bool:
    """Whether the triple of crossing types admits a third Reidemeister move.

    Only the two cyclic over/under patterns fail; for like strands these are
    (1, 2, 1) and (2, 1, 2).
    """
    return not (l1 == l3 and l1 != l2)


def _r3(m, seq, *, all_triples: bool = False):
    for i in range(1, len(seq) - 1):
        for l1, l2, l3 in itertools.product((1, 2), repeat=3):
            if not all_triples and not r3_is_isotopy(l1, l2, l3):
                continue
            yield Relation(
                "R3", seq,
                (_w(Cross(i, l3), Cross(i + 1, l2), Cross(i, l1)),),
                (_w(Cross(i + 1, l1), Cross(i, l2), Cross(i + 1, l3)),),
                f"i={i} types={(l1, l2, l3)}",
            )


def _footprint(g: Generator) -> tuple[int, int]:
    """Half-open interval of bottom positions (0-based) used by ``g``."""
    if isinstance(g, Cap):
        return (g.i - 1, g.i - 1)
    return (g.i - 1, g.i + 1)


def _delta_len(g: Generator) -> int:
    return 2 if isinstance(g, Cap) else -2 if isinstance(g, Cup) else 0


def _shift(g: Generator, d: int) -> Generator:
    if isinstance(g, Cap):
        return Cap(g.i + d, g.order)
    if isinstance(g, Cross):
        return Cross(g.i + d, g.type)
    return type(g)(g.i + d)


def _all_gens(m: int, seq: StrandSeq) -> Iterator[Generator]:
    n = len(seq)
    for i in range(1, n + 2):
        for o in _orders(m):
            yield Cap(i, o)
    for i in range(1, n):
        if seq.label(i) + seq.label(i + 1) == m:
            yield Cup(i)
        yield Cross(i, 1)
        yield Cross(i, 2)
        if _like(seq, i):
            yield Dumbbell(i)


def _height(m, seq, max_n):
    gens = list(_all_gens(m, seq))
    for a, b in itertools.product(gens, repeat=2):
        alo, ahi = _footprint(a)
        blo, bhi = _footprint(b)
        if isinstance(a, Cap) and isinstance(b, Cap):
            if not alo < blo:
                continue
        elif ahi > blo:
            continue
        first = (a, _shift(b, _delta_len(a)))
        second = (b, a)
        if _max_len(seq, first) > max_n or _max_len(seq, second) > max_n:
            continue
        yield Relation("height", seq, (_w(*first),), (_w(*second),), f"{a} | {b}")


def _pitchfork(m, seq):
    for i in range(1, len(seq) + 1):
        for o in _orders(m):
            for t in (1, 2):
                yield Relation(
                    "pitchfork", seq,
                    (_w(Cap(i + 1, o), Cross(i, t)),),
                    (_w(Cap(i, o), Cross(i + 1, 3 - t)),),
                    f"i={i} cap={o} T^i({t})G^(i+1) = T^(i+1)({3 - t})G^i",
                )


# MOY / Hecke families


def _moy_ia(m, seq):
    for i in range(1, len(seq) + 2):
        for o in _orders(m):
            yield Relation("MOY-ia", seq, (_w(Cap(i, o), Cup(i)),), (_scaled(quantum_int(m)),), f"i={i} cap={o}")


def _moy_ib(m, seq):
    for i in range(1, len(seq) + 1):
        s = seq.label(i)
        yield Relation(
            "MOY-ib", seq, (_w(Cap(i + 1, _order_for(m, s)), Dumbbell(i), Cup(i + 1)),),
            (_scaled(quantum_int(m - 1)),), f"i={i} F^(i+1)U^iG^(i+1)",
        )
        yield Relation(
            "MOY-ib", seq, (_w(Cap(i, _order_for(m, m - s)), Dumbbell(i + 1), Cup(i)),),
            (_scaled(quantum_int(m - 1)),), f"i={i} F^iU^(i+1)G^i",
        )


def _moy_iia(m, seq):
    two = quantum_int(2)
    for i in range(1, len(seq)):
        if _like(seq, i):
            yield Relation("MOY-iia", seq, (_w(Dumbbell(i), Dumbbell(i)),), (_scaled(two, Dumbbell(i)),), f"i={i}")


def _moy_iib(m, seq):
    # bottom has (z, w) with z + w = m at slots j, j+1; the cap goes in between
    for j in range(1, len(seq)):
        z, w = seq.label(j), seq.label(j + 1)
        if z + w != m:
            continue
        i = j + 1
        yield Relation(
            "MOY-iib", seq,
            (_w(Cap(i, _order_for(m, z)), Dumbbell(i - 1), Dumbbell(i + 1), Cup(i)),),
            (_w(Cup(j), Cap(j, _order_for(m, z))), _scaled(quantum_int(m - 2))),
            f"i={i} F^iU^(i-1)U^(i+1)G^i = G^{j}F^{j} + [m-2]",
        )


def _moy_iii(m, seq):
    for i in range(1, len(seq) - 1):
        if _like(seq, i) and _like(seq, i + 1):
            U, V = Dumbbell(i), Dumbbell(i + 1)
            yield Relation("MOY-iii", seq, (_w(V, U, V), _w(U)), (_w(U, V, U), _w(V)), f"i={i}")


def _hecke(m, seq):
    for i in range(1, len(seq)):
        if not _like(seq, i):
            continue
        # (T - q^(1-m))(T + q^(-1-m)) = T^2 + (q^(-1-m) - q^(1-m)) T - q^(-2m) = 0
        T = Cross(i, 2)
        yield Relation(
            "Hecke", seq,
            (_w(T, T), _scaled(monomial(-1 - m) - monomial(1 - m), T), _scaled(monomial(-2 * m, -1))),
            (), f"i={i} quadratic",
        )


def _braid(m, seq):
    for i in range(1, len(seq) - 1):
        if _like(seq, i) and _like(seq, i + 1):
            for t in (1, 2):
                a, b = Cross(i, t), Cross(i + 1, t)
                yield Relation("braid", seq, (_w(a, b, a),), (_w(b, a, b),), f"i={i} type={t}")


MOVE_FAMILIES = ("R0", "R1", "R2", "R3", "height", "pitchfork")
MOY_FAMILIES = ("MOY-ia", "MOY-ib", "MOY-iia", "MOY-iib", "MOY-iii")
FAMILIES = MOVE_FAMILIES + MOY_FAMILIES + ("Hecke", "braid")

_BUILDERS = {
    "R0": _r0,
    "R1": _r1,
    "R2": _r2,
    "R3": _r3,
    "pitchfork": _pitchfork,
    "MOY-ia": _moy_ia,
    "MOY-ib": _moy_ib,
    "MOY-iia": _moy_iia,
    "MOY-iib": _moy_iib,
    "MOY-iii": _moy_iii,
    "Hecke": _hecke,
    "braid": _braid,
}


def _fits(rel: Relation, max_n: int) -> bool:
    for _, gens in rel.lhs + rel.rhs:
        try:
            if _max_len(rel.bottom, gens) > max_n:
                return False
        except DiagramError:
            return True  # let check() report it
    return True


def generate(m: int, max_n: int, families: Sequence[str] = FAMILIES, *, all_r3_triples: bool = False) -> Iterator[Relation]:
    """Every instance of the requested families whose sequences stay within ``max_n`` strands."""
    for fam in families:
        for n in range(0, max_n + 1):
            for seq in sequences(m, n):
                if fam == "height":
                    yield from _height(m, seq, max_n)
                    continue
                if fam == "R3":
                    rels = _r3(m, seq, all_triples=all_r3_triples)
                else:
                    rels = _BUILDERS[fam](m, seq)
                for rel in rels:
                    if _fits(rel, max_n):
                        yield rel


class _MatrixCache:
    def __init__(self, cap: int, cap_sign: int):
        self.cap, self.cap_sign = cap, cap_sign
        self._store: dict = {}

    def get(self, bottom: StrandSeq, gens: tuple[Generator, ...]) -> OperatorMatrix:
        key = (bottom, gens)
        if key not in self._store:
            self._store[key] = operator_matrix(gens, bottom, cap=self.cap, cap_sign=self.cap_sign)
        return self._store[key]


def _side_matrix(side: Side, bottom: StrandSeq, top: StrandSeq, cache: _MatrixCache) -> OperatorMatrix:
    total = OperatorMatrix(bottom, top)
    for c, gens in side:
        mat = cache.get(bottom, gens)
        total = total + (mat if c == ONE else c * mat)
    return total


def _side_top(side: Side, bottom: StrandSeq) -> StrandSeq | None:
    tops = {validate(TangleWord(bottom, gens)) for _, gens in side}
    if len(tops) > 1:
        raise DiagramError(f"terms have different tops: {sorted(map(str, tops))}")
    return tops.pop() if tops else None


def check(rel: Relation, *, cap: int = DEFAULT_MATRIX_CAP, cap_sign: int = 1, cache: _MatrixCache | None = None) -> RelationResult:
    cache = cache or _MatrixCache(cap, cap_sign)
    try:
        top_l = _side_top(rel.lhs, rel.bottom)
        top_r = _side_top(rel.rhs, rel.bottom)
        top = next((t for t in (top_l, top_r) if t is not None), rel.bottom)
        if top_l is not None and top_r is not None and top_l != top_r:
            return RelationResult(rel, False, f"sides have different tops {top_l} vs {top_r}")
        lhs = _side_matrix(rel.lhs, rel.bottom, top, cache)
        rhs = _side_matrix(rel.rhs, rel.bottom, top, cache)
    except DiagramError as exc:
        return RelationResult(rel, False, str(exc))
    diff = lhs - rhs
    if diff.is_zero():
        return RelationResult(rel, True)
    (row, col), v = sorted(diff.entries.items())[0]
    return RelationResult(rel, False, f"entry row={row} col={col} differs by {v}")


@dataclass
class FamilySummary:
    family: str
    passed: int = 0
    failed: int = 0
    failures: list[RelationResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def iter_results(
    m: int,
    max_n: int,
    families: Sequence[str] = FAMILIES,
    *,
    cap: int = DEFAULT_MATRIX_CAP,
    cap_sign: int = 1,
    all_r3_triples: bool = False,
) -> Iterator[RelationResult]:
    cache = _MatrixCache(cap, cap_sign)
    for rel in generate(m, max_n, families, all_r3_triples=all_r3_triples):
        yield check(rel, cache=cache)


def run_battery(
    m: int,
    max_n: int,
    families: Sequence[str] = FAMILIES,
    *,
    cap: int = DEFAULT_MATRIX_CAP,
    cap_sign: int = 1,
    all_r3_triples: bool = False,
) -> dict[str, FamilySummary]:
    """Per-family pass/fail counts, in ``families`` order."""
    out = {fam: FamilySummary(fam) for fam in families}
    for res in iter_results(m, max_n, families, cap=cap, cap_sign=cap_sign, all_r3_triples=all_r3_triples):
        summary = out[res.relation.family]
        if res.ok:
            summary.passed += 1
        else:
            summary.failed += 1
            summary.failures.append(res)
    return out
