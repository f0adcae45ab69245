"""Skein-side cross checks.

:func:`evaluate_by_resolution` expands every crossing into identity and
dumbbell terms and evaluates the crossingless words.  The Kauffman bracket
state sum is an independent m=2 reference, written in the bracket variable
``A`` and stored as a :class:`LaurentPoly` whose variable is ``A``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .diagram import TangleWord, braid_closure, iter_resolutions, validate
from .ktheory import evaluate_closed
from .laurent import ZERO, LaurentPoly, monomial, quantum_int

__all__ = [
    "evaluate_by_resolution",
    "kauffman_bracket_jones",
    "BracketSizeError",
    "Convention",
    "ConventionReport",
    "ConventionError",
    "apply_convention",
    "match_convention_m2",
    "markov_conjugates",
    "writhe",
]

MAX_BRAID_STRANDS = 8
MAX_BRAID_CROSSINGS = 12


def evaluate_by_resolution(word: TangleWord) -> LaurentPoly:
    validate(word)
    total = ZERO
    for term in iter_resolutions(word):
        total = total + term.weight * evaluate_closed(term.word)
    return total


# Kauffman bracket


class BracketSizeError(ValueError):
    pass


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def _loops(k: int, braid: Sequence[int], smoothing: Sequence[int]) -> int:
    """Number of circles after smoothing each crossing (0 vertical, 1 horizontal)."""
    c = len(braid)

    def node(t: int, p: int) -> int:
        return t * k + p

    dsu = _DSU((c + 1) * k)
    for t, (letter, s) in enumerate(zip(braid, smoothing)):
        j = abs(letter) - 1
        for p in range(k):
            if p not in (j, j + 1):
                dsu.union(node(t, p), node(t + 1, p))
        if s == 0:
            dsu.union(node(t, j), node(t + 1, j))
            dsu.union(node(t, j + 1), node(t + 1, j + 1))
        else:
            dsu.union(node(t, j), node(t, j + 1))
            dsu.union(node(t + 1, j), node(t + 1, j + 1))
    for p in range(k):  # closure
        dsu.union(node(c, p), node(0, p))
    return len({dsu.find(x) for x in range((c + 1) * k)})


def writhe(braid: Sequence[int]) -> int:
    return sum(1 if x > 0 else -1 for x in braid)


def kauffman_bracket_jones(braid: Sequence[int], k: int) -> LaurentPoly:
    """Writhe-normalized bracket ``(-A^3)^-w <L>`` of the braid closure.

    The unknot gives 1.  A positive letter smooths vertically with weight A,
    a negative one with weight A^-1.  Substituting ``A = t^(-1/4)`` gives
    the Jones polynomial; positive letters are right-handed.
    """
    braid = list(braid)
    if not 1 <= k <= MAX_BRAID_STRANDS or len(braid) > MAX_BRAID_CROSSINGS:
        raise BracketSizeError(f"bracket oracle limited to k <= {MAX_BRAID_STRANDS}, {MAX_BRAID_CROSSINGS} crossings")
    for x in braid:
        if not 1 <= abs(x) <= k - 1:
            raise BracketSizeError(f"letter {x} out of range for {k} strands")
    delta = -(monomial(2) + monomial(-2))
    bracket = ZERO
    for smoothing in itertools.product((0, 1), repeat=len(braid)):
        e = sum((1 if x > 0 else -1) * (1 if s == 0 else -1) for x, s in zip(braid, smoothing))
        bracket = bracket + monomial(e) * delta ** (_loops(k, braid, smoothing) - 1)
    w = writhe(braid)
    return bracket * monomial(-3 * w, (-1) ** (w % 2))


# convention matching at m = 2


@dataclass(frozen=True)
class Convention:
    """engine = [2]_q * (eps * q^e)^w * f(A) with A^2 -> sign * q^power."""

    sign: int
    power: int
    eps: int
    e: int

    def describe(self) -> str:
        frame = "" if self.e == 0 and self.eps == 1 else f" times ({'-' if self.eps < 0 else ''}q^{self.e})^writhe"
        return f"A^2 -> {'-' if self.sign < 0 else ''}q^{self.power}, unknot -> q + q^-1{frame}"


def apply_convention(conv: Convention, bracket: LaurentPoly, w: int) -> LaurentPoly:
    out = {}
    for e, c in bracket.items():
        if e % 2:
            raise ValueError("bracket polynomial has an odd power of A")
        half = e // 2
        out[half * conv.power] = out.get(half * conv.power, 0) + c * conv.sign ** (half % 2)
    frame = monomial(conv.e * w, conv.eps ** (w % 2))
    return quantum_int(2) * LaurentPoly(out) * frame


class ConventionError(RuntimeError):
    pass


@dataclass
class ConventionReport:
    convention: Convention
    fitted_on: list[str]
    verified: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verified.values())


# The round unknot and Hopf alone leave three candidates; the two one-kink
# unknot presentations pin down the framing factor.
DEFAULT_FIT = {
    "unknot": (1, []),
    "unknot+kink": (2, [1]),
    "unknot-kink": (2, [-1]),
    "hopf": (2, [1, 1]),
}
DEFAULT_VERIFY = {"trefoil": (2, [1, 1, 1]), "figure-eight": (3, [1, -2, 1, -2])}


def _candidates(max_e: int = 6) -> Iterable[Convention]:
    for sign, power, eps, e in itertools.product((1, -1), (1, -1), (1, -1), range(-max_e, max_e + 1)):
        if e == 0 and eps == -1:
            continue
        yield Convention(sign, power, eps, e)


def match_convention_m2(fit: dict | None = None, verify: dict | None = None) -> ConventionReport:
    """Fix the engine-to-bracket substitution on ``fit``, then check ``verify``.

    Links are given as ``name -> (strands, braid)``.  Raises
    :class:`ConventionError` unless exactly one candidate fits.
    """
    fit = DEFAULT_FIT if fit is None else fit
    verify = DEFAULT_VERIFY if verify is None else verify

    def data(links):
        return {
            name: (evaluate_closed(braid_closure(k, b, 2)), kauffman_bracket_jones(b, k), writhe(b))
            for name, (k, b) in links.items()
        }

    fit_data = data(fit)
    survivors = [
        conv for conv in _candidates()
        if all(apply_convention(conv, f, w) == eng for eng, f, w in fit_data.values())
    ]
    if len(survivors) != 1:
        raise ConventionError(f"{len(survivors)} substitutions fit {sorted(fit)}; need exactly one")
    conv = survivors[0]
    report = ConventionReport(conv, sorted(fit))
    for name, (eng, f, w) in data(verify).items():
        report.verified[name] = apply_convention(conv, f, w) == eng
    if not report.ok:
        bad = [n for n, ok in report.verified.items() if not ok]
        raise ConventionError(f"substitution {conv.describe()} fails on {bad}")
    return report


def markov_conjugates(braid: Sequence[int], k: int) -> list[list[int]]:
    """``g w g^-1`` for every generator g = +-1..+-(k-1)."""
    out = []
    for j in range(1, k):
        for g in (j, -j):
            out.append([g, *braid, -g])
    return out
