"""Plain-text formats for permutations, wreath elements and polynomials.

Permutation: one line of space-separated images ``p(0) ... p(n-1)``; lines
starting with ``#`` are comments, and a ``# expect t>=V`` comment records the
value the permutation is claimed to reach.  Commas and surrounding
parentheses are tolerated so rows can be pasted from a table.

Wreath element: ``m n`` header, the outer permutation line, then m fiber lines.

Polynomial: ``n: a0 a1 a2 ...``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .constructions.polys import PermPoly
from .constructions.wreath import WreathElement
from .errors import NotABijection, ParseError
from .perm import Perm

_EXPECT = re.compile(r"^#\s*expect\s+t\s*>=\s*(-?\d+)\s*$")

PathLike = Union[str, Path]


@dataclass(frozen=True)
class WitnessFile:
    perms: tuple
    expect: Optional[int] = None


def _content_lines(text: str):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def _ints(line: str) -> list[int]:
    cleaned = line.replace(",", " ").strip().strip("()[]")
    try:
        return [int(tok) for tok in cleaned.split()]
    except ValueError as exc:
        raise ParseError(f"not an integer list: {line!r}") from exc


def parse_perm_line(line: str) -> Perm:
    vals = _ints(line)
    if not vals:
        raise ParseError("empty permutation line")
    try:
        return Perm(vals)
    except NotABijection as exc:
        raise ParseError(str(exc)) from exc


def format_perm(p: Perm) -> str:
    return " ".join(str(v) for v in p.image)


def parse_witness_text(text: str) -> WitnessFile:
    expect = None
    for raw in text.splitlines():
        m = _EXPECT.match(raw.strip())
        if m:
            expect = int(m.group(1))
    perms = tuple(parse_perm_line(line) for line in _content_lines(text))
    if not perms:
        raise ParseError("no permutation found")
    return WitnessFile(perms, expect)


def read_witness(path: PathLike) -> WitnessFile:
    return parse_witness_text(Path(path).read_text())


def format_witness(perms, expect: Optional[int] = None,
                   comments: tuple = ()) -> str:
    head = [f"# {c}" for c in comments]
    if expect is not None:
        head.append(f"# expect t>={expect}")
    return "\n".join(head + [format_perm(p) for p in perms]) + "\n"


def write_witness(path: PathLike, perms, expect: Optional[int] = None,
                  comments: tuple = ()):
    Path(path).write_text(format_witness(perms, expect, comments))


def parse_wreath_text(text: str) -> WreathElement:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty wreath file")
    header = _ints(lines[0])
    if len(header) != 2:
        raise ParseError("wreath header must be 'm n'")
    m, n = header
    if len(lines) != m + 2:
        raise ParseError(f"expected {m + 2} lines, got {len(lines)}")
    outer = parse_perm_line(lines[1])
    fibers = tuple(parse_perm_line(line) for line in lines[2:])
    return WreathElement(m, n, outer, fibers)


def format_wreath(w: WreathElement) -> str:
    rows = [f"{w.m} {w.n}", format_perm(w.pi)]
    rows += [format_perm(f) for f in w.fibers]
    return "\n".join(rows) + "\n"


def parse_poly_text(text: str) -> PermPoly:
    lines = list(_content_lines(text))
    if len(lines) != 1 or ":" not in lines[0]:
        raise ParseError("polynomial line must look like 'n: a0 a1 ...'")
    head, tail = lines[0].split(":", 1)
    try:
        n = int(head)
    except ValueError as exc:
        raise ParseError(f"bad modulus {head!r}") from exc
    return PermPoly(n, tuple(_ints(tail)))


def format_poly(f: PermPoly) -> str:
    return str(f) + "\n"
