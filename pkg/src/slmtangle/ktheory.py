"""Operator engine on the K-theory basis.

A basis state is a tuple ``delta`` of length ``n`` with entries in
``0..m-1``; it stands for the class ``prod_j W_{j, delta(j)}``.  A
:class:`StateVector` is a finitely supported map from basis states to
Laurent polynomials.  Each generator acts by the closed-form coefficients
below; the q-power bookkeeping of the W classes is already folded in.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .diagram import (
    Cap,
    Cross,
    Cup,
    DiagramError,
    Dumbbell,
    Generator,
    StrandSeq,
    TangleWord,
    cap_labels,
    drop,
    step,
    switch,
    unlike_composite,
    validate,
)
from .laurent import ONE, ZERO, LaurentPoly, monomial

__all__ = [
    "StateVector",
    "OperatorMatrix",
    "MatrixCapError",
    "NegativeCoefficientError",
    "DEFAULT_MATRIX_CAP",
    "basis_states",
    "dumbbell_coefficients",
    "apply_cap",
    "apply_cup",
    "apply_dumbbell",
    "apply_cross_like",
    "apply_cross_unlike",
    "apply_generator",
    "apply_word",
    "evaluate_closed",
    "operator_matrix",
    "poincare_table",
    "render_matrix",
]

DEFAULT_MATRIX_CAP = 10**6

State = tuple[int, ...]


class MatrixCapError(ValueError):
    pass


class NegativeCoefficientError(ValueError):
    pass


def basis_states(m: int, n: int) -> list[State]:
    """All ``m**n`` states, in lexicographic order."""
    return list(itertools.product(range(m), repeat=n))


@dataclass(frozen=True)
class StateVector:
    seq: StrandSeq
    terms: Mapping[State, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        n, m = len(self.seq), self.seq.m
        clean = {}
        for k, v in self.terms.items():
            k = tuple(k)
            if len(k) != n or any(not 0 <= d < m for d in k):
                raise ValueError(f"state {k} does not fit sequence {self.seq}")
            v = LaurentPoly.coerce(v)
            if not v.is_zero():
                clean[k] = v
        object.__setattr__(self, "terms", clean)

    @property
    def m(self) -> int:
        return self.seq.m

    @classmethod
    def basis(cls, seq: StrandSeq, state: Sequence[int]) -> "StateVector":
        return cls(seq, {tuple(state): ONE})

    @classmethod
    def scalar(cls, m: int, value: LaurentPoly | int = 1) -> "StateVector":
        return cls(StrandSeq(m), {(): LaurentPoly.coerce(value)})

    @classmethod
    def _raw(cls, seq: StrandSeq, terms: dict) -> "StateVector":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "seq", seq)
        object.__setattr__(obj, "terms", terms)
        return obj

    def coeff(self, state: Sequence[int]) -> LaurentPoly:
        return self.terms.get(tuple(state), ZERO)

    def as_scalar(self) -> LaurentPoly:
        if len(self.seq) != 0:
            raise ValueError("vector is not on the empty sequence")
        return self.terms.get((), ZERO)

    def __add__(self, other: "StateVector") -> "StateVector":
        if other.seq != self.seq:
            raise ValueError("sequence mismatch")
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return StateVector._raw(self.seq, out)

    def __rmul__(self, c) -> "StateVector":
        c = LaurentPoly.coerce(c)
        if c.is_zero():
            return StateVector._raw(self.seq, {})
        return StateVector._raw(self.seq, {k: c * v for k, v in self.terms.items()})

    def __neg__(self) -> "StateVector":
        return (-1) * self

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self + (-other)


def _acc(out: dict, key, value: LaurentPoly) -> None:
    s = out.get(key)
    s = value if s is None else s + value
    if s.is_zero():
        out.pop(key, None)
    else:
        out[key] = s


def _linear(v: StateVector, seq: StrandSeq, fn: Callable[[State], Iterable[tuple[State, LaurentPoly]]]) -> StateVector:
    out: dict = {}
    for state, c in v.terms.items():
        for new_state, k in fn(state):
            _acc(out, new_state, c * k)
    return StateVector._raw(seq, out)


# cap / cup


@lru_cache(maxsize=None)
def _cap_terms(m: int, i: int, sign: int) -> tuple[tuple[tuple[int, int], LaurentPoly], ...]:
    pre = sign * (-1) ** ((i - 1) * (m - 1))
    return tuple(((m - 1 - k, k), monomial(k, pre * (-1) ** k)) for k in range(m))


def apply_cap(v: StateVector, i: int, order: str = "lr", *, sign: int = 1) -> StateVector:
    """Cap creating slots ``i, i+1``.  ``sign=-1`` is a debugging perturbation."""
    seq = step(v.seq, Cap(i, order))
    terms = _cap_terms(v.m, i, sign)
    k = i - 1

    def fn(state):
        for pair, c in terms:
            yield state[:k] + pair + state[k:], c

    return _linear(v, seq, fn)


def apply_cup(v: StateVector, i: int) -> StateVector:
    seq = drop(v.seq, i)
    m, k = v.m, i - 1
    pre = (-1) ** (i * (m - 1))

    def fn(state):
        a, b = state[k], state[k + 1]
        if a + b == m - 1:
            yield state[:k] + state[k + 2 :], monomial(-a, pre * (-1) ** a)

    return _linear(v, seq, fn)


# dumbbell and like crossings


@lru_cache(maxsize=None)
def dumbbell_coefficients(m: int, a: int, b: int) -> tuple[tuple[tuple[int, int], LaurentPoly], ...]:
    """Action of the dumbbell on ``W_{i,a} W_{i+1,b}`` (independent of ``i``)."""
    qq = monomial(1) - monomial(-1)
    if a == b:
        return ()
    if a < b:
        terms = [((a, b), monomial(1))]
        terms += [((a + t, b - t), qq.shift(t)) for t in range(1, b - a)]
        terms.append(((b, a), monomial(b - a - 1, -1)))
    else:
        terms = [((a, b), monomial(-1))]
        terms += [((b + t, a - t), -qq.shift(b - a + t)) for t in range(1, a - b)]
        terms.append(((b, a), monomial(1 + b - a, -1)))
    return tuple(terms)


@lru_cache(maxsize=None)
def _cross_like_coefficients(m: int, type_: int, a: int, b: int):
    """[T(2)] = q^-m (q - U),  [T(1)] = q^m (q^-1 - U)."""
    scale, diag = (monomial(m), monomial(-1)) if type_ == 1 else (monomial(-m), monomial(1))
    acc: dict = {(a, b): diag}
    for pair, c in dumbbell_coefficients(m, a, b):
        _acc(acc, pair, -c)
    return tuple((pair, scale * c) for pair, c in sorted(acc.items()))


# On a pair of (m-1)-labelled strands (m > 2) the dumbbell and the like
# crossing act by the transposes of the (1,1) tables.  With the untransposed
# tables the two rotations of a like crossing (cap opened left or right) are
# not even proportional, and R3 and pitchfork fail on mixed sequences.


@lru_cache(maxsize=None)
def _transposed(kind: str, m: int, type_: int) -> dict:
    src = {
        "U": lambda a, b: dumbbell_coefficients(m, a, b),
        "T": lambda a, b: _cross_like_coefficients(m, type_, a, b),
    }[kind]
    out: dict = {}
    for a in range(m):
        for b in range(m):
            for pair, c in src(a, b):
                out.setdefault(pair, []).append(((a, b), c))
    return {k: tuple(sorted(v)) for k, v in out.items()}


def _pair_table(m: int, label: int, kind: str, type_: int = 0) -> Callable:
    if m > 2 and label == m - 1:
        table = _transposed(kind, m, type_)
        return lambda a, b: table.get((a, b), ())
    if kind == "U":
        return lambda a, b: dumbbell_coefficients(m, a, b)
    return lambda a, b: _cross_like_coefficients(m, type_, a, b)


def _apply_pair_table(v: StateVector, seq: StrandSeq, i: int, table) -> StateVector:
    k = i - 1

    def fn(state):
        for (a2, b2), c in table(state[k], state[k + 1]):
            yield state[:k] + (a2, b2) + state[k + 2 :], c

    return _linear(v, seq, fn)


def _require_like(seq: StrandSeq, i: int, what: str) -> None:
    if not 1 <= i <= len(seq) - 1:
        raise DiagramError(f"slot {i} out of range for sequence of length {len(seq)}")
    if seq.label(i) != seq.label(i + 1):
        raise DiagramError(f"{what} needs equal labels at slot {i}, got {seq.label(i)},{seq.label(i + 1)}")


def apply_dumbbell(v: StateVector, i: int) -> StateVector:
    _require_like(v.seq, i, "dumbbell")
    return _apply_pair_table(v, v.seq, i, _pair_table(v.m, v.seq.label(i), "U"))


def apply_cross_like(v: StateVector, i: int, type_: int) -> StateVector:
    _require_like(v.seq, i, "like crossing")
    if type_ not in (1, 2):
        raise DiagramError(f"crossing type must be 1 or 2, got {type_!r}")
    return _apply_pair_table(v, v.seq, i, _pair_table(v.m, v.seq.label(i), "T", type_))


def apply_cross_unlike(v: StateVector, i: int, type_: int, *, cap_sign: int = 1) -> StateVector:
    """Unlike crossing via the rotation composite (cap, like crossing, cup)."""
    if not 1 <= i <= len(v.seq) - 1:
        raise DiagramError(f"slot {i} out of range for sequence of length {len(v.seq)}")
    if v.seq.label(i) == v.seq.label(i + 1):
        raise DiagramError(f"labels at slot {i} are alike; use apply_cross_like")
    for g in unlike_composite(v.seq, i, type_):
        v = apply_generator(v, g, cap_sign=cap_sign)
    return v


def apply_generator(v: StateVector, gen: Generator, *, cap_sign: int = 1) -> StateVector:
    if isinstance(gen, Cap):
        return apply_cap(v, gen.i, gen.order, sign=cap_sign)
    if isinstance(gen, Cup):
        return apply_cup(v, gen.i)
    if isinstance(gen, Dumbbell):
        return apply_dumbbell(v, gen.i)
    if isinstance(gen, Cross):
        if not 1 <= gen.i <= len(v.seq) - 1:
            raise DiagramError(f"slot {gen.i} out of range for sequence of length {len(v.seq)}")
        if v.seq.label(gen.i) == v.seq.label(gen.i + 1):
            return apply_cross_like(v, gen.i, gen.type)
        return apply_cross_unlike(v, gen.i, gen.type, cap_sign=cap_sign)
    raise DiagramError(f"not a generator: {gen!r}")


def apply_word(v: StateVector, gens: Iterable[Generator], *, cap_sign: int = 1) -> StateVector:
    for g in gens:
        v = apply_generator(v, g, cap_sign=cap_sign)
    return v


def evaluate_closed(word: TangleWord, *, cap_sign: int = 1) -> LaurentPoly:
    """Invariant of a closed word: push the scalar 1 through every generator."""
    top = validate(word)
    if len(word.bottom) or len(top):
        raise DiagramError("word is not closed")
    return apply_word(StateVector.scalar(word.m), word.gens, cap_sign=cap_sign).as_scalar()


def poincare_table(word: TangleWord) -> dict[int, int]:
    """``{i: dim H^{i,-i}}`` for a closed crossingless graph."""
    if not word.is_crossingless:
        raise DiagramError("poincare_table needs a crossingless graph")
    value = evaluate_closed(word)
    table = {}
    for e, c in value.items():
        if c < 0:
            raise NegativeCoefficientError(f"coefficient {c} of q^{e} is negative in {value}")
        table[e] = c
    return dict(sorted(table.items()))


# matrices


@dataclass(frozen=True)
class OperatorMatrix:
    """Sparse matrix of a linear map ``domain -> codomain``.

    ``entries[(row, col)]`` is the coefficient of basis state ``row`` in
    the image of basis state ``col``.
    """

    domain: StrandSeq
    codomain: StrandSeq
    entries: Mapping[tuple[State, State], LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in self.entries.items() if not v.is_zero()})

    @property
    def m(self) -> int:
        return self.domain.m

    @classmethod
    def identity(cls, seq: StrandSeq) -> "OperatorMatrix":
        return cls(seq, seq, {(s, s): ONE for s in basis_states(seq.m, len(seq))})

    def _check_shape(self, other: "OperatorMatrix") -> None:
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise ValueError(
                f"shape mismatch: {self.domain}->{self.codomain} vs {other.domain}->{other.codomain}"
            )

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._check_shape(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            _acc(out, k, v)
        return OperatorMatrix(self.domain, self.codomain, out)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return self + (-1) * other

    def __rmul__(self, c) -> "OperatorMatrix":
        c = LaurentPoly.coerce(c)
        return OperatorMatrix(self.domain, self.codomain, {k: c * v for k, v in self.entries.items()})

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        """``self @ other`` applies ``other`` first."""
        if other.codomain != self.domain:
            raise ValueError("composition mismatch")
        cols: dict = {}
        for (r, c), v in self.entries.items():
            cols.setdefault(c, []).append((r, v))
        out: dict = {}
        for (r, c), v in other.entries.items():
            for r2, w in cols.get(r, ()):
                _acc(out, (r2, c), w * v)
        return OperatorMatrix(other.domain, self.codomain, out)

    def is_zero(self) -> bool:
        return not self.entries

    def column(self, col: Sequence[int]) -> dict[State, LaurentPoly]:
        col = tuple(col)
        return {r: v for (r, c), v in self.entries.items() if c == col}


def operator_matrix(
    gens: Sequence[Generator],
    bottom: StrandSeq,
    *,
    cap: int = DEFAULT_MATRIX_CAP,
    cap_sign: int = 1,
) -> OperatorMatrix:
    """Matrix of the composite of ``gens`` on the basis over ``bottom``."""
    word = TangleWord(bottom, tuple(gens))
    top = validate(word)
    m = bottom.m
    size = m ** len(bottom) * m ** len(top)
    if size > cap:
        raise MatrixCapError(f"matrix would have {size} entries, cap is {cap}")
    entries = {}
    for col in basis_states(m, len(bottom)):
        image = apply_word(StateVector.basis(bottom, col), word.gens, cap_sign=cap_sign)
        for row, v in image.terms.items():
            entries[(row, col)] = v
    return OperatorMatrix(bottom, top, entries)


def _state_str(state: State, m: int) -> str:
    if not state:
        return "-"
    if m <= 10:
        return "".join(map(str, state))
    return ",".join(map(str, state))


def iter_matrix_lines(mat: OperatorMatrix) -> Iterator[str]:
    yield f"{mat.m} {len(mat.domain)} {len(mat.codomain)}"
    for (row, col), v in sorted(mat.entries.items()):
        yield f"{_state_str(row, mat.m)} {_state_str(col, mat.m)} {v}"


def render_matrix(mat: OperatorMatrix) -> str:
    return "\n".join(iter_matrix_lines(mat)) + "\n"
