"""Named test diagrams: small links and crossingless closed graphs."""

from __future__ import annotations

import random

from .diagram import Cap, Cross, Cup, Dumbbell, Generator, StrandSeq, TangleWord, braid_closure, step

__all__ = ["BRAIDS", "links", "crossingless_graphs", "with_circle"]

# name -> (strands, braid word); all at most 4 crossings
BRAIDS: dict[str, tuple[int, list[int]]] = {
    "unknot": (1, []),
    "unknot-kink": (2, [1]),
    "unlink2": (2, []),
    "unlink2-r2": (2, [1, -1]),
    "hopf": (2, [1, 1]),
    "hopf-mirror": (2, [-1, -1]),
    "trefoil": (2, [1, 1, 1]),
    "trefoil-mirror": (2, [-1, -1, -1]),
    "torus-link-2-4": (2, [1, 1, 1, 1]),
    "figure-eight": (3, [1, -2, 1, -2]),
    "unknot-3": (3, [1, 2]),
    "hopf-plus-circle": (3, [1, 1]),
}


def _word(m: int, gens: list[Generator]) -> TangleWord:
    return TangleWord(StrandSeq(m), tuple(gens))


def links(m: int) -> dict[str, TangleWord]:
    """Closed words with at most four crossings, including unlike ones."""
    out = {name: braid_closure(k, b, m) for name, (k, b) in BRAIDS.items()}
    # two arcs side by side, crossing each other between the caps
    out["side-kink"] = _word(m, [Cap(1), Cap(3), Cross(2, 1), Cup(2), Cup(1)])
    out["side-hopf"] = _word(m, [Cap(1), Cap(3), Cross(2, 1), Cross(2, 1), Cup(3), Cup(1)])
    out["side-hopf-rl"] = _word(m, [Cap(1), Cap(3, "rl"), Cross(2, 2), Cross(2, 2), Cup(3), Cup(1)])
    out["side-r2"] = _word(m, [Cap(1), Cap(3), Cross(2, 1), Cross(2, 2), Cup(3), Cup(1)])
    return out


def with_circle(word: TangleWord) -> TangleWord:
    """``word`` next to a disjoint round circle on its left."""
    return TangleWord(word.bottom, (Cap(1), Cup(1)) + word.gens)


def _close(seq: StrandSeq, gens: list[Generator]) -> None:
    while len(seq):
        i = next(i for i in range(1, len(seq)) if seq.label(i) + seq.label(i + 1) == seq.m)
        gens.append(Cup(i))
        seq = step(seq, gens[-1])


def crossingless_graphs(m: int, count: int = 20, seed: int = 0) -> list[TangleWord]:
    """Closed crossingless words: a few fixed shapes, then seeded random walks."""
    nest = [Cap(1), Cap(2)]  # (1, 1, m-1, m-1)
    fixed = [
        [Cap(1), Cup(1)],
        [Cap(1), Cup(1), Cap(1), Cup(1)],
        nest + [Cup(2), Cup(1)],
        nest + [Dumbbell(1), Cup(2), Cup(1)],
        nest + [Dumbbell(3), Cup(2), Cup(1)],
        nest + [Dumbbell(1), Dumbbell(3), Cup(2), Cup(1)],
        nest + [Dumbbell(1), Dumbbell(1), Cup(2), Cup(1)],
        [Cap(1), Cap(2), Cap(3)] + [Dumbbell(1), Dumbbell(2), Dumbbell(1), Cup(3), Cup(2), Cup(1)],
    ]
    graphs = [_word(m, g) for g in fixed]
    rng = random.Random(seed * 1000 + m)
    while len(graphs) < count:
        seq, gens = StrandSeq(m), []
        for _ in range(rng.randint(3, 10)):
            opts: list[Generator] = []
            if len(seq) < 6:
                opts += [Cap(i, o) for i in range(1, len(seq) + 2) for o in ("lr", "rl")]
            for i in range(1, len(seq)):
                a, b = seq.label(i), seq.label(i + 1)
                if a == b:
                    opts += [Dumbbell(i)] * 2
                if a + b == m:
                    opts.append(Cup(i))
            g = rng.choice(opts)
            gens.append(g)
            seq = step(seq, g)
        _close(seq, gens)
        graphs.append(_word(m, gens))
    return graphs
