"""Dense q=1 oracle.

Vectors are integer numpy arrays of shape ``(m,) * n``; axis ``j`` carries
the tensor factor at slot ``j + 1``.  Nothing here touches the sparse engine
except the final comparison in :func:`compare_at_q1`.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .diagram import Cap, Cross, Cup, Dumbbell, Generator, StrandSeq, TangleWord, cap_labels, step, validate
from .ktheory import StateVector, apply_word, basis_states
from .laurent import eval_q1

__all__ = [
    "ClassicalVector",
    "classical_cap",
    "classical_cup",
    "classical_cross",
    "classical_dumbbell",
    "classical_apply",
    "wedge_action",
    "dual_basis",
    "cap_vector",
    "check_equivariance",
    "Q1Report",
    "compare_at_q1",
    "random_word",
]


@dataclass(frozen=True)
class ClassicalVector:
    seq: StrandSeq
    data: np.ndarray

    @property
    def m(self) -> int:
        return self.seq.m

    @classmethod
    def basis(cls, seq: StrandSeq, state: Sequence[int]) -> "ClassicalVector":
        data = np.zeros((seq.m,) * len(seq), dtype=np.int64)
        data[tuple(state)] = 1
        return cls(seq, data)


def _cap_matrix(m: int, i: int) -> np.ndarray:
    c = np.zeros((m, m), dtype=np.int64)
    for k in range(m):
        c[m - 1 - k, k] = (-1) ** ((i - 1) * (m - 1) + k)
    return c


def _cup_matrix(m: int, i: int) -> np.ndarray:
    d = np.zeros((m, m), dtype=np.int64)
    for a in range(m):
        d[a, m - 1 - a] = (-1) ** (i * (m - 1) + a)
    return d


def classical_cap(v: ClassicalVector, i: int, order: str = "lr") -> ClassicalVector:
    seq = step(v.seq, Cap(i, order))
    out = np.multiply.outer(v.data, _cap_matrix(v.m, i))
    n = v.data.ndim
    out = np.moveaxis(out, [n, n + 1], [i - 1, i])
    return ClassicalVector(seq, out)


def classical_cup(v: ClassicalVector, i: int) -> ClassicalVector:
    seq = step(v.seq, Cup(i))
    out = np.tensordot(v.data, _cup_matrix(v.m, i), axes=([i - 1, i], [0, 1]))
    return ClassicalVector(seq, np.asarray(out, dtype=np.int64))


def _swap(v: ClassicalVector, i: int, seq: StrandSeq) -> ClassicalVector:
    return ClassicalVector(seq, np.swapaxes(v.data, i - 1, i).copy())


def classical_cross(v: ClassicalVector, i: int) -> ClassicalVector:
    """Crossing at q=1.  Like pairs transpose; unlike pairs go round a cap."""
    seq = step(v.seq, Cross(i, 1))
    x, y = v.seq.label(i), v.seq.label(i + 1)
    if x == y:
        return _swap(v, i, seq)
    # open a (y, x) cap on the right, swap the equal middle pair, close on the left
    w = classical_cap(v, i + 2, "lr" if y == 1 else "rl")
    w = _swap(w, i + 1, step(w.seq, Cross(i + 1, 1)))
    return classical_cup(w, i)


def classical_dumbbell(v: ClassicalVector, i: int) -> ClassicalVector:
    """Merge-split at q=1: identity minus the transposition."""
    seq = step(v.seq, Dumbbell(i))
    return ClassicalVector(seq, v.data - np.swapaxes(v.data, i - 1, i))


def classical_apply(v: ClassicalVector, gens: Sequence[Generator]) -> ClassicalVector:
    for g in gens:
        if isinstance(g, Cap):
            v = classical_cap(v, g.i, g.order)
        elif isinstance(g, Cup):
            v = classical_cup(v, g.i)
        elif isinstance(g, Cross):
            v = classical_cross(v, g.i)
        else:
            v = classical_dumbbell(v, g.i)
    return v


# sl_m equivariance


def wedge_action(x: np.ndarray, p: int) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    """Matrix of ``x`` (an m x m matrix) acting on the p-th wedge power.

    Basis: increasing index tuples in lexicographic order.
    """
    m = x.shape[0]
    subsets = list(itertools.combinations(range(m), p))
    index = {s: k for k, s in enumerate(subsets)}
    out = np.zeros((len(subsets), len(subsets)), dtype=np.int64)
    for col, s in enumerate(subsets):
        for pos, j in enumerate(s):
            for r in range(m):
                if x[r, j] == 0:
                    continue
                t = list(s)
                t[pos] = r
                if len(set(t)) < p:
                    continue
                sign = 1
                # bubble-sort parity
                for a in range(p):
                    for b in range(a + 1, p):
                        if t[a] > t[b]:
                            sign = -sign
                out[index[tuple(sorted(t))], col] += sign * x[r, j]
    return out, subsets


def dual_basis(m: int) -> list[int]:
    """Position, among the (m-1)-subsets, of the dual basis vector w_k.

    w_k is the wedge of every e_j except e_{m-1-k}, in increasing order.
    """
    subsets = list(itertools.combinations(range(m), m - 1))
    return [subsets.index(tuple(j for j in range(m) if j != m - 1 - k)) for k in range(m)]


def _chevalley(m: int) -> list[tuple[str, np.ndarray]]:
    out = []
    for r in range(m - 1):
        e = np.zeros((m, m), dtype=np.int64)
        e[r, r + 1] = 1
        out.append((f"e{r + 1}", e))
        out.append((f"f{r + 1}", e.T.copy()))
    return out


def _rep_matrix(m: int, label: int, x: np.ndarray) -> np.ndarray:
    if label == 1 or m == 2:
        return x
    w, _ = wedge_action(x, m - 1)
    perm = dual_basis(m)
    return w[np.ix_(perm, perm)]


def cap_vector(m: int, i: int = 1, order: str = "lr") -> np.ndarray:
    return _cap_matrix(m, i)


def check_equivariance(m: int, i: int = 1, order: str = "lr", vector: np.ndarray | None = None) -> str | None:
    """None if every Chevalley generator kills the cap image, else its name."""
    c = cap_vector(m, i, order) if vector is None else vector
    left, right = cap_labels(m, order)
    for name, x in _chevalley(m):
        a, b = _rep_matrix(m, left, x), _rep_matrix(m, right, x)
        if np.any(a @ c + c @ b.T):
            return name
    return None


# comparison with the engine


@dataclass(frozen=True)
class Q1Report:
    ok: bool
    column: tuple[int, ...] | None = None
    row: tuple[int, ...] | None = None
    engine: int | None = None
    classical: int | None = None

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return f"column {self.column} row {self.row}: engine {self.engine} vs classical {self.classical}"


def compare_at_q1(word: TangleWord) -> Q1Report:
    top = validate(word)
    m, n = word.m, len(word.bottom)
    # every bottom basis vector at once: a trailing batch axis rides along
    batch = np.eye(m**n, dtype=np.int64).reshape((m,) * n + (m**n,))
    cls = classical_apply(ClassicalVector(word.bottom, batch), word.gens).data
    for k, col in enumerate(basis_states(m, n)):
        eng = apply_word(StateVector.basis(word.bottom, col), word.gens)
        dense = np.zeros((m,) * len(top), dtype=np.int64)
        for state, c in eng.terms.items():
            dense[state] = eval_q1(c)
        expected = cls[..., k]
        if not np.array_equal(dense, expected):
            row = tuple(int(x) for x in np.argwhere(dense != expected)[0])
            return Q1Report(False, col, row, int(dense[row]), int(expected[row]))
    return Q1Report(True)


def random_word(m: int, n: int, length: int, rng: random.Random, *, max_n: int | None = None) -> TangleWord:
    """A valid random word on a random bottom of length ``n``."""
    max_n = n + 2 if max_n is None else max_n
    labels = sorted({1, m - 1})
    seq = StrandSeq(m, tuple(rng.choice(labels) for _ in range(n)))
    bottom, gens = seq, []
    for _ in range(length):
        options: list[Generator] = []
        k = len(seq)
        if k + 2 <= max_n:
            options += [Cap(i, o) for i in range(1, k + 2) for o in ("lr", "rl")]
        for i in range(1, k):
            a, b = seq.label(i), seq.label(i + 1)
            options += [Cross(i, 1), Cross(i, 2)]
            if a + b == m:
                options.append(Cup(i))
            if a == b:
                options.append(Dumbbell(i))
        if not options:
            break
        g = rng.choice(options)
        gens.append(g)
        seq = step(seq, g)
    return TangleWord(bottom, tuple(gens))
