"""Integer Laurent polynomials in a single variable ``q``.

Values are immutable and always stored in canonical form (no zero
coefficients), so ``==`` and ``hash`` are structural.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "LaurentParseError",
    "ZERO",
    "ONE",
    "Q",
    "monomial",
    "quantum_int",
    "eval_q1",
    "parse_laurent",
]

Scalar = Union[int, "LaurentPoly"]


class LaurentParseError(ValueError):
    pass


class LaurentPoly:
    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be int")
            acc[e] = acc.get(e, 0) + c
        self._coeffs = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _from_clean(cls, coeffs: dict[int, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x: Scalar) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls._from_clean({0: x} if x else {})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def items(self):
        """(exponent, coefficient) pairs, descending by exponent."""
        return sorted(self._coeffs.items(), reverse=True)

    def coeff(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("degree of zero polynomial")
        return max(self._coeffs)

    def valuation(self) -> int:
        if not self._coeffs:
            raise ValueError("valuation of zero polynomial")
        return min(self._coeffs)

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    # ring operations

    def __add__(self, other: Scalar) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_clean({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (f, d), = b.items()
            return LaurentPoly._from_clean({e + f: c * d for e, c in a.items()})
        if len(a) == 1:
            (e, c), = a.items()
            return LaurentPoly._from_clean({e + f: c * d for f, d in b.items()})
        out: dict[int, int] = {}
        for e, c in a.items():
            for f, d in b.items():
                out[e + f] = out.get(e + f, 0) + c * d
        return LaurentPoly._from_clean({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_monomial():
                (e, c), = self._coeffs.items()
                if c in (1, -1):
                    return LaurentPoly._from_clean({e * n: c ** (-n)})
            raise ValueError("only unit monomials have inverses in Z[q, q^-1]")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        return LaurentPoly._from_clean({e + k: c for e, c in self._coeffs.items()})

    def bar(self) -> "LaurentPoly":
        """The involution ``q -> q^-1``."""
        return LaurentPoly._from_clean({-e: c for e, c in self._coeffs.items()})

    def substitute(self, sign: int, power: int) -> "LaurentPoly":
        """Substitute ``q -> sign * q**power``."""
        out: dict[int, int] = {}
        for e, c in self._coeffs.items():
            out[e * power] = out.get(e * power, 0) + c * (sign ** (e % 2))
        return LaurentPoly({k: v for k, v in out.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return render_laurent(self)

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self.items()}


ZERO = LaurentPoly._from_clean({})
ONE = LaurentPoly._from_clean({0: 1})
Q = LaurentPoly._from_clean({1: 1})


def monomial(e: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly._from_clean({e: c} if c else {})


def quantum_int(n: int) -> LaurentPoly:
    """``[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)``; zero for ``n = 0``."""
    if n < 0:
        raise ValueError("quantum_int expects n >= 0")
    return LaurentPoly._from_clean({n - 1 - 2 * k: 1 for k in range(n)})


def eval_q1(p: Scalar) -> int:
    return sum(LaurentPoly.coerce(p)._coeffs.values())


def _render_exp(e: int) -> str:
    return "q" if e == 1 else f"q^{e}"


def render_laurent(p: LaurentPoly) -> str:
    """Render with descending exponents, e.g. ``2*q^3 - q + 1 - q^-2``."""
    if p.is_zero():
        return "0"
    parts = []
    for k, (e, c) in enumerate(p.items()):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif mag == 1:
            body = _render_exp(e)
        else:
            body = f"{mag}*{_render_exp(e)}"
        if k == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)\s*(?:\*\s*(?P<qa>q)(?:\s*\^\s*(?P<ea>\{\s*-?\d+\s*\}|-?\d+))?)?
        | (?P<qb>q)(?:\s*\^\s*(?P<eb>\{\s*-?\d+\s*\}|-?\d+))?
        )\s*""",
    re.VERBOSE,
)


def _exp(tok: str | None) -> int:
    if tok is None:
        return 1
    return int(tok.strip("{} "))


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the grammar produced by :func:`render_laurent`.

    Also accepts ``q^{-1}`` style braces and arbitrary spacing.
    """
    s = text.strip()
    if not s:
        raise LaurentParseError("empty polynomial")
    pos, acc, first = 0, {}, True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise LaurentParseError(f"unexpected input at column {pos + 1}: {s[pos:]!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise LaurentParseError(f"missing operator at column {pos + 1}")
        first = False
        c = -1 if sign == "-" else 1
        if m.group("coef") is not None:
            c *= int(m.group("coef"))
            e = _exp(m.group("ea")) if m.group("qa") else 0
        else:
            e = _exp(m.group("eb"))
        acc[e] = acc.get(e, 0) + c
        pos = m.end()
    return LaurentPoly(acc)
