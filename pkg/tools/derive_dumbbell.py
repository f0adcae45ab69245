"""Derive the dumbbell operator U = [P][Q] on the W basis from scratch.

Works in the E-monomial basis E_i^a E_{i+1}^b, applying the two
push/pull formulas literally:

  Q(E_i^a E_{i+1}^b) = Sym^{b-a-1}(L_{i+1}/L_{i-1}) det^a {1}          a < b
                     = 0                                              a = b
                     = Sym^{a-b-1}(L_{i+1}/L_{i-1}) det^b {1}[-1]     a > b

  P(S) = [S (x) O_X (x) E_i] with [O_X (x) E_i] = q E_{i+1} - q^-1 E_i
         (the {1} shift is already folded into that identity)

where Sym^n of the rank-2 bundle has class sum_s E_i^s E_{i+1}^(n-s) and
det = E_i E_{i+1}.  The result is then rewritten in the W basis using
W_{i,a} W_{i+1,b} = q^{(i-1)a + i b} E_i^a E_{i+1}^b.

Run as a script to print the table for small m.  The test suite imports
``dumbbell_table`` and compares it with the engine's closed form.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from slmtangle.laurent import LaurentPoly, monomial  # noqa: E402

Poly2 = dict  # (a, b) -> LaurentPoly, a polynomial in E_i, E_{i+1}


def _padd(acc: Poly2, key, c: LaurentPoly) -> None:
    s = acc.get(key, LaurentPoly()) + c
    if s.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = s


def _pmul(x: Poly2, y: Poly2) -> Poly2:
    out: Poly2 = {}
    for (a1, b1), c1 in x.items():
        for (a2, b2), c2 in y.items():
            _padd(out, (a1 + a2, b1 + b2), c1 * c2)
    return out


def _sym(n: int) -> Poly2:
    return {(s, n - s): monomial(0) for s in range(n + 1)}


def _det_pow(d: int) -> Poly2:
    return {(d, d): monomial(0)}


def q_map(a: int, b: int):
    """Returns (sym_degree, det_power, sign) or None when Q kills the monomial."""
    if a < b:
        return (b - a - 1, a, 1)
    if a == b:
        return None
    return (a - b - 1, b, -1)  # homological shift [-1] contributes -1


def p_map(sym_degree: int, det_power: int, sign: int) -> Poly2:
    o_x_e = {(0, 1): monomial(1), (1, 0): monomial(-1, -1)}
    out = _pmul(_pmul(_sym(sym_degree), _det_pow(det_power)), o_x_e)
    return {k: v * sign for k, v in out.items()}


def dumbbell_E(a: int, b: int) -> Poly2:
    qa = q_map(a, b)
    return {} if qa is None else p_map(*qa)


def dumbbell_table(m: int, i: int) -> dict:
    """{(a, b): {(a2, b2): coeff}} for U acting on W_{i,a} W_{i+1,b}."""
    table = {}
    for a in range(m):
        for b in range(m):
            w_exp = (i - 1) * a + i * b
            row = {}
            for (a2, b2), c in dumbbell_E(a, b).items():
                if not (0 <= a2 < m and 0 <= b2 < m):
                    raise AssertionError(f"left the basis range: {(a2, b2)}")
                row[(a2, b2)] = c.shift(w_exp - ((i - 1) * a2 + i * b2))
            table[(a, b)] = row
    return table


if __name__ == "__main__":
    m = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    i = int(sys.argv[2]) if len(sys.argv) > 2 else 1
    for key, row in dumbbell_table(m, i).items():
        terms = ", ".join(f"{k}: {v}" for k, v in sorted(row.items()))
        print(f"U{key} = {{{terms}}}")
