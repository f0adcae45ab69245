"""Combinatorial tangle / MOY-graph diagrams.

A diagram is a :class:`TangleWord`: a bottom :class:`StrandSeq` plus a list
of elementary generators applied bottom-to-top.  Slot indices are 1-based.
Strand labels are restricted to ``1`` and ``m-1``; thick edges only occur
inside a :class:`Dumbbell` (a merge vertex immediately followed by a split).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence, Union

from .laurent import LaurentPoly, ONE, monomial

__all__ = [
    "DiagramError",
    "ValidationError",
    "StrandSeq",
    "Cap",
    "Cup",
    "Cross",
    "Dumbbell",
    "Generator",
    "TangleWord",
    "ResolutionTerm",
    "switch",
    "drop",
    "validate",
    "cap_labels",
    "braid_closure",
    "unknot",
    "rewrite_unlike",
    "resolve_crossings",
    "mirror",
    "UNLIKE_INNER_TYPE",
    "unlike_composite",
]


class DiagramError(ValueError):
    pass


class ValidationError(DiagramError):
    """Raised for a word whose generator chain does not compose.

    ``index`` is the 0-based position of the first offending generator
    (``None`` for errors in the bottom sequence itself).
    """

    def __init__(self, message: str, index: int | None = None, gen: "Generator | None" = None):
        super().__init__(message)
        self.index = index
        self.gen = gen


@dataclass(frozen=True)
class StrandSeq:
    m: int
    labels: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise DiagramError(f"m must be an integer >= 2, got {self.m!r}")
        labels = tuple(self.labels)
        for lab in labels:
            if lab not in (1, self.m - 1):
                raise DiagramError(f"label {lab} not in {{1, {self.m - 1}}} for m={self.m}")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __getitem__(self, i):
        return self.labels[i]

    def label(self, i: int) -> int:
        """Label at 1-based slot ``i``."""
        return self.labels[i - 1]

    def replace(self, labels: Sequence[int]) -> "StrandSeq":
        return StrandSeq(self.m, tuple(labels))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.labels)) + ")"


def _check_pair_slot(seq: StrandSeq, i: int) -> None:
    if not isinstance(i, int) or not 1 <= i <= len(seq) - 1:
        raise DiagramError(f"slot {i} out of range for sequence of length {len(seq)}")


def switch(seq: StrandSeq, i: int) -> StrandSeq:
    _check_pair_slot(seq, i)
    lab = list(seq.labels)
    lab[i - 1], lab[i] = lab[i], lab[i - 1]
    return seq.replace(lab)


def drop(seq: StrandSeq, i: int) -> StrandSeq:
    _check_pair_slot(seq, i)
    a, b = seq.label(i), seq.label(i + 1)
    if a + b != seq.m:
        raise DiagramError(f"labels ({a},{b}) at slot {i} do not sum to m={seq.m}")
    return seq.replace(seq.labels[: i - 1] + seq.labels[i + 1 :])


def cap_labels(m: int, order: str) -> tuple[int, int]:
    if order == "lr":
        return (1, m - 1)
    if order == "rl":
        return (m - 1, 1)
    raise DiagramError(f"cap order must be 'lr' or 'rl', got {order!r}")


@dataclass(frozen=True)
class Cap:
    """Creates strands at slots ``i, i+1``; ``order='lr'`` gives labels (1, m-1)."""

    i: int
    order: str = "lr"

    def __post_init__(self):
        if self.order not in ("lr", "rl"):
            raise DiagramError(f"cap order must be 'lr' or 'rl', got {self.order!r}")


@dataclass(frozen=True)
class Cup:
    i: int


@dataclass(frozen=True)
class Cross:
    i: int
    type: int

    def __post_init__(self):
        if self.type not in (1, 2):
            raise DiagramError(f"crossing type must be 1 or 2, got {self.type!r}")


@dataclass(frozen=True)
class Dumbbell:
    i: int


Generator = Union[Cap, Cup, Cross, Dumbbell]


def step(seq: StrandSeq, gen: Generator) -> StrandSeq:
    """Sequence at the top of ``gen`` when its bottom is ``seq``."""
    m, n = seq.m, len(seq)
    if isinstance(gen, Cap):
        if not isinstance(gen.i, int) or not 1 <= gen.i <= n + 1:
            raise DiagramError(f"cap slot {gen.i} out of range for {n} strands")
        k = gen.i - 1
        return seq.replace(seq.labels[:k] + cap_labels(m, gen.order) + seq.labels[k:])
    if isinstance(gen, Cup):
        return drop(seq, gen.i)
    if isinstance(gen, Cross):
        return switch(seq, gen.i)
    if isinstance(gen, Dumbbell):
        _check_pair_slot(seq, gen.i)
        a, b = seq.label(gen.i), seq.label(gen.i + 1)
        if a != b:
            raise DiagramError(f"dumbbell needs equal labels at slot {gen.i}, got ({a},{b})")
        return seq
    raise DiagramError(f"not a generator: {gen!r}")


@dataclass(frozen=True)
class TangleWord:
    bottom: StrandSeq
    gens: tuple[Generator, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))

    @property
    def m(self) -> int:
        return self.bottom.m

    @cached_property
    def top(self) -> StrandSeq:
        return validate(self)

    def sequences(self) -> list[StrandSeq]:
        """The strand sequence below each generator, plus the final top."""
        seqs = [self.bottom]
        for g in self.gens:
            seqs.append(step(seqs[-1], g))
        return seqs

    @property
    def is_closed(self) -> bool:
        return len(self.bottom) == 0 and len(self.top) == 0

    @property
    def is_crossingless(self) -> bool:
        return not any(isinstance(g, Cross) for g in self.gens)

    @property
    def crossing_count(self) -> int:
        return sum(isinstance(g, Cross) for g in self.gens)

    def then(self, *gens: Generator) -> "TangleWord":
        return TangleWord(self.bottom, self.gens + tuple(gens))

    def __add__(self, other: "TangleWord") -> "TangleWord":
        """Stack ``other`` on top of ``self``."""
        if other.bottom != self.top:
            raise DiagramError(f"cannot stack: top {self.top} != bottom {other.bottom}")
        return TangleWord(self.bottom, self.gens + other.gens)


def validate(word: TangleWord) -> StrandSeq:
    """Check every generator in turn; return the top sequence.

    Raises :class:`ValidationError` naming the first offending generator.
    """
    seq = word.bottom
    for k, g in enumerate(word.gens):
        try:
            seq = step(seq, g)
        except DiagramError as exc:
            raise ValidationError(f"generator {k + 1} ({g}): {exc}", index=k, gen=g) from None
    return seq


def unknot(m: int) -> TangleWord:
    return TangleWord(StrandSeq(m), (Cap(1), Cup(1)))


def braid_closure(k: int, braid: Sequence[int], m: int) -> TangleWord:
    """Closure of a braid on ``k`` strands over the sequence (1,...,1,m-1,...,m-1).

    Positive letters become type-1 crossings, negative letters type-2.
    """
    if k < 1:
        raise DiagramError("braid closure needs k >= 1")
    gens: list[Generator] = [Cap(j) for j in range(1, k + 1)]
    for letter in braid:
        if not isinstance(letter, int) or not 1 <= abs(letter) <= k - 1:
            raise DiagramError(f"braid letter {letter} out of range for {k} strands")
        gens.append(Cross(abs(letter), 1 if letter > 0 else 2))
    gens.extend(Cup(j) for j in range(k, 0, -1))
    return TangleWord(StrandSeq(m), tuple(gens))


def mirror(word: TangleWord) -> TangleWord:
    """Swap every crossing type 1 <-> 2."""
    return TangleWord(
        word.bottom,
        tuple(Cross(g.i, 3 - g.type) if isinstance(g, Cross) else g for g in word.gens),
    )


# Type of the like crossing inside the rotation composite realizing an unlike
# crossing of a given type.
UNLIKE_INNER_TYPE = {1: 2, 2: 1}


def unlike_composite(seq: StrandSeq, i: int, type_: int) -> tuple[Generator, ...]:
    """Rotation composite for an unlike crossing at slot ``i`` of ``seq``.

    Labels (x, y) become (y, x) via: cap (y, x) at slots i+2, i+3; like
    crossing at i+1; cup at i.
    """
    x, y = seq.label(i), seq.label(i + 1)
    if x == y:
        raise DiagramError(f"labels at slot {i} are alike; no rotation needed")
    order = "lr" if y == 1 else "rl"
    return (Cap(i + 2, order), Cross(i + 1, UNLIKE_INNER_TYPE[type_]), Cup(i))


def rewrite_unlike(word: TangleWord) -> TangleWord:
    """Replace every unlike crossing by its rotation composite."""
    seq = word.bottom
    out: list[Generator] = []
    for g in word.gens:
        if isinstance(g, Cross) and seq.label(g.i) != seq.label(g.i + 1):
            out.extend(unlike_composite(seq, g.i, g.type))
        else:
            out.append(g)
        seq = step(seq, g)
    return TangleWord(word.bottom, tuple(out))


@dataclass(frozen=True)
class ResolutionTerm:
    weight: LaurentPoly
    word: TangleWord


def crossing_resolution(m: int, type_: int) -> tuple[LaurentPoly, LaurentPoly]:
    """(identity weight, dumbbell weight) for a like crossing of the given type."""
    if type_ == 1:
        return monomial(m - 1), monomial(m, -1)
    return monomial(1 - m), monomial(-m, -1)


def iter_resolutions(word: TangleWord) -> Iterator[ResolutionTerm]:
    """Depth-first skein expansion; yields terms in branch-index order.

    Branch 0 at a crossing is the identity smoothing, branch 1 the dumbbell.
    Unlike crossings are rewritten by the rotation composite first.
    """
    validate(word)
    word = rewrite_unlike(word)
    gens, m = word.gens, word.m
    prefix: list[Generator] = []

    def walk(k: int, weight: LaurentPoly) -> Iterator[ResolutionTerm]:
        if k == len(gens):
            yield ResolutionTerm(weight, TangleWord(word.bottom, tuple(prefix)))
            return
        g = gens[k]
        if not isinstance(g, Cross):
            prefix.append(g)
            yield from walk(k + 1, weight)
            prefix.pop()
            return
        w_id, w_u = crossing_resolution(m, g.type)
        yield from walk(k + 1, weight * w_id)
        prefix.append(Dumbbell(g.i))
        yield from walk(k + 1, weight * w_u)
        prefix.pop()

    yield from walk(0, ONE)


def resolve_crossings(word: TangleWord) -> list[ResolutionTerm]:
    return list(iter_resolutions(word))
