"""Text format for diagram words.

One diagram per text.  Statements are separated by newlines or ``;`` and
``#`` starts a comment::

    m=3
    cap 1
    cap 3 order=rl
    cross 2 1      # unlike crossing, rewritten internally
    cup 2
    cup 1

``braid k=<int> [<signed ints>]`` expands in place into the closure of the
braid.  ``bottom <labels>`` (comma separated, may be empty) sets a
non-empty starting sequence and must precede the first generator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import (
    Cap,
    Cross,
    Cup,
    DiagramError,
    Dumbbell,
    Generator,
    StrandSeq,
    TangleWord,
    ValidationError,
    braid_closure,
    validate,
)

__all__ = ["DSLSyntaxError", "DSLValidationError", "parse_dsl", "render_dsl"]


class DSLSyntaxError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DSLValidationError(ValueError):
    def __init__(self, message: str, line: int | None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


@dataclass
class _Stmt:
    line: int
    words: list[str]


_INT = re.compile(r"[+-]?\d+$")
_HEADER = re.compile(r"m\s*=\s*(\S+)$")


def _statements(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        for chunk in body.split(";"):
            chunk = chunk.strip()
            if chunk:
                yield lineno, chunk


def _int(tok: str, line: int, what: str) -> int:
    if not _INT.match(tok):
        raise DSLSyntaxError(f"{what} must be an integer, got {tok!r}", line)
    return int(tok)


def _slot(args: list[str], line: int, kw: str) -> int:
    if not args:
        raise DSLSyntaxError(f"'{kw}' needs a slot index", line)
    i = _int(args[0], line, "slot")
    if i < 1:
        raise DSLSyntaxError(f"slot must be >= 1, got {i}", line)
    return i


def _parse_braid(rest: str, line: int, m: int) -> list[Generator]:
    match = re.fullmatch(r"k\s*=\s*(\S+?)\s*\[(.*)\]", rest)
    if not match:
        raise DSLSyntaxError("expected 'braid k=<int> [<letters>]'", line)
    k = _int(match.group(1), line, "k")
    letters = [t.strip() for t in match.group(2).split(",") if t.strip()]
    braid = [_int(t, line, "braid letter") for t in letters]
    try:
        return list(braid_closure(k, braid, m).gens)
    except DiagramError as exc:
        raise DSLValidationError(str(exc), line) from None


def parse_dsl(text: str, m: int | None = None, bottom: tuple[int, ...] | None = None) -> TangleWord:
    """Parse ``text`` into a validated :class:`TangleWord`.

    ``m`` may be supplied by the caller; if the text also carries an
    ``m=`` header the two must agree.  A caller-supplied ``bottom`` may not
    be combined with a ``bottom`` statement.
    """
    header: int | None = None
    given = bottom is not None
    bottom = tuple(bottom) if given else ()
    seen_bottom = False
    gens: list[Generator] = []
    lines: list[int] = []
    for line, stmt in _statements(text):
        hm = _HEADER.match(stmt)
        if hm:
            if header is not None:
                raise DSLSyntaxError("duplicate m= header", line)
            if gens or seen_bottom:
                raise DSLSyntaxError("m= header must come first", line)
            header = _int(hm.group(1), line, "m")
            if header < 2:
                raise DSLSyntaxError(f"m must be >= 2, got {header}", line)
            if m is not None and m != header:
                raise DSLSyntaxError(f"header m={header} disagrees with requested m={m}", line)
            continue
        if header is None and m is None:
            raise DSLSyntaxError("missing m= header", line)
        mm = header if header is not None else m
        kw, _, rest = stmt.partition(" ")
        args = rest.split()
        if kw == "bottom":
            if gens:
                raise DSLSyntaxError("'bottom' must precede every generator", line)
            if given or seen_bottom:
                raise DSLSyntaxError("bottom labels given twice", line)
            seen_bottom = True
            toks = [t for t in rest.replace(",", " ").split()]
            bottom = tuple(_int(t, line, "label") for t in toks)
            try:
                StrandSeq(mm, bottom)
            except DiagramError as exc:
                raise DSLValidationError(str(exc), line) from None
            continue
        if kw == "cap":
            i = _slot(args, line, kw)
            order = "lr"
            for opt in args[1:]:
                key, eq, val = opt.partition("=")
                if key != "order" or not eq or val not in ("lr", "rl"):
                    raise DSLSyntaxError(f"bad cap option {opt!r} (want order=lr|rl)", line)
                order = val
            new = [Cap(i, order)]
        elif kw == "cup":
            if len(args) != 1:
                raise DSLSyntaxError("expected 'cup <i>'", line)
            new = [Cup(_slot(args, line, kw))]
        elif kw == "cross":
            if len(args) != 2:
                raise DSLSyntaxError("expected 'cross <i> <1|2>'", line)
            t = _int(args[1], line, "crossing type")
            if t not in (1, 2):
                raise DSLSyntaxError(f"crossing type must be 1 or 2, got {t}", line)
            new = [Cross(_slot(args, line, kw), t)]
        elif kw == "dumbbell":
            if len(args) != 1:
                raise DSLSyntaxError("expected 'dumbbell <i>'", line)
            new = [Dumbbell(_slot(args, line, kw))]
        elif kw == "braid":
            new = _parse_braid(rest.strip(), line, mm)
        else:
            raise DSLSyntaxError(f"unknown statement {kw!r}", line)
        gens.extend(new)
        lines.extend([line] * len(new))

    mm = header if header is not None else m
    if mm is None:
        raise DSLSyntaxError("missing m= header", 1)
    try:
        seq = StrandSeq(mm, bottom)
    except DiagramError as exc:
        raise DSLValidationError(str(exc), None) from None
    word = TangleWord(seq, tuple(gens))
    try:
        validate(word)
    except ValidationError as exc:
        raise DSLValidationError(str(exc), lines[exc.index] if exc.index is not None else None) from None
    return word


def _render_gen(g: Generator) -> str:
    if isinstance(g, Cap):
        return f"cap {g.i}" + ("" if g.order == "lr" else " order=rl")
    if isinstance(g, Cup):
        return f"cup {g.i}"
    if isinstance(g, Cross):
        return f"cross {g.i} {g.type}"
    return f"dumbbell {g.i}"


def render_dsl(word: TangleWord) -> str:
    out = [f"m={word.m}"]
    if len(word.bottom):
        out.append("bottom " + ",".join(map(str, word.bottom.labels)))
    out.extend(_render_gen(g) for g in word.gens)
    return "\n".join(out) + "\n"
