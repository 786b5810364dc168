"""Text and JSON element descriptions.

Three input forms are accepted:

* generator words ``s0 s1 s12`` (the rank comes from a separate ``n``),
* quadratic specs ``n=13 cremona=1,7,8 perm=cycle(1 2 ... 13)`` or ``perm=[2,3,...,1]``,
  meaning cremona o permutation (the permutation acts first),
* JSON objects ``{"n": .., "word" | "matrix" | "cremona"+"perm": ..}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from .errors import InvalidElementError, ParseError, WeylError
from .weyl import WeylElement, compose, cremona, from_matrix, from_word, permutation_element


@dataclass(frozen=True)
class ParsedElement:
    element: WeylElement
    kind: str  # "word" | "quadratic" | "matrix"
    text: str  # canonical text that parses back to the same matrix

    def echo(self) -> Dict:
        return {"format": self.kind, "text": self.text, "n": self.element.n}


def _position(text: str, offset: int) -> tuple:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _fail(text: str, offset: int, message: str) -> ParseError:
    line, col = _position(text, offset)
    return ParseError(message, line, col)


def parse_element(text: str, n: Optional[int] = None) -> ParsedElement:
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty element description")
    if stripped[0] in "{[":
        return parse_json(text, n)
    if re.search(r"(^|\s)(n|cremona|perm)=", text):
        return parse_quadratic(text)
    return parse_word(text, n)


def parse_file(path: str, n: Optional[int] = None) -> ParsedElement:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_element(text, n)


# -- words ---------------------------------------------------------------------

_WORD_TOKEN = re.compile(r"\S+")
_GEN = re.compile(r"s(\d+)$")


def parse_word(text: str, n: Optional[int]) -> ParsedElement:
    indices: List[int] = []
    for m in _WORD_TOKEN.finditer(text):
        g = _GEN.match(m.group())
        if not g:
            raise _fail(text, m.start(), f"expected a generator token s<k>, got {m.group()!r}")
        indices.append(int(g.group(1)))
    if n is None:
        raise ParseError("word input needs the rank: pass --n")
    for k, i in enumerate(indices):
        if i > n - 1:
            raise InvalidElementError(f"generator s{i} does not exist in W_{n} (token {k + 1})")
    element = from_word(n, indices)
    canon = " ".join(f"s{i}" for i in indices)
    return ParsedElement(element, "word", canon)


# -- quadratic specs -------------------------------------------------------------

_KEY = re.compile(r"\s*([A-Za-z_]+)=")
_INT = re.compile(r"\s*(-?\d+)")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise _fail(self.text, self.pos, f"expected {literal!r}")
        self.pos += len(literal)

    def integer(self) -> int:
        m = _INT.match(self.text, self.pos)
        if not m:
            self.skip_ws()
            raise _fail(self.text, self.pos, "expected an integer")
        self.pos = m.end()
        return int(m.group(1))

    def key(self) -> str:
        m = _KEY.match(self.text, self.pos)
        if not m:
            self.skip_ws()
            raise _fail(self.text, self.pos, "expected key=value (keys: n, cremona, perm)")
        self.pos = m.end()
        return m.group(1)


def _int_list(cur: _Cursor, close: str) -> List[int]:
    out: List[int] = []
    while cur.peek() != close:
        if not cur.peek():
            raise _fail(cur.text, cur.pos, f"unterminated list, expected {close!r}")
        out.append(cur.integer())
        if cur.peek() == ",":
            cur.pos += 1
    cur.expect(close)
    return out


def _cycles_to_images(n: int, cycles: Sequence[Sequence[int]]) -> List[int]:
    images = list(range(1, n + 1))
    seen = set()
    for cyc in cycles:
        for a in cyc:
            if not 1 <= a <= n:
                raise InvalidElementError(f"cycle entry {a} outside 1..{n}")
            if a in seen:
                raise InvalidElementError(f"index {a} appears in more than one cycle position")
            seen.add(a)
        for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
            images[a - 1] = b
    return images


def parse_quadratic(text: str) -> ParsedElement:
    cur = _Cursor(text)
    values: Dict[str, object] = {}
    while not cur.at_end():
        start = cur.pos
        key = cur.key()
        if key in values:
            raise _fail(text, start, f"duplicate key {key!r}")
        if key == "n":
            values[key] = cur.integer()
        elif key == "cremona":
            triple = [cur.integer()]
            for _ in range(2):
                cur.expect(",")
                triple.append(cur.integer())
            values[key] = triple
        elif key == "perm":
            if cur.peek() == "[":
                cur.expect("[")
                values[key] = ("list", _int_list(cur, "]"))
            else:
                cur.expect("cycle")
                cycles = []
                while cur.peek() == "(":
                    cur.expect("(")
                    cycles.append(_int_list(cur, ")"))
                if not cycles:
                    raise _fail(text, cur.pos, "expected '(' after cycle")
                values[key] = ("cycles", cycles)
        else:
            raise _fail(text, start, f"unknown key {key!r} (keys: n, cremona, perm)")
    if "n" not in values:
        raise ParseError("quadratic spec needs n=<int>")
    if "cremona" not in values:
        raise ParseError("quadratic spec needs cremona=<i>,<j>,<k>")
    n = values["n"]
    assert isinstance(n, int)
    if n < 3:
        raise InvalidElementError("W_n needs n >= 3")
    kind, data = values.get("perm", ("list", list(range(1, n + 1))))
    images = data if kind == "list" else _cycles_to_images(n, data)
    perm = permutation_element(n, images)
    element = compose(cremona(n, values["cremona"]), perm)
    triple = ",".join(str(i) for i in values["cremona"])
    canon = f"n={n} cremona={triple} perm=[{','.join(str(i) for i in images)}]"
    return ParsedElement(element, "quadratic", canon)


# -- JSON ----------------------------------------------------------------------


def parse_json(text: str, n: Optional[int] = None) -> ParsedElement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if isinstance(data, list):
        data = {"n": len(data) - 1 if n is None else n, "matrix": data}
    if not isinstance(data, dict):
        raise ParseError("element JSON must be an object or a matrix array")
    if "n" not in data or not isinstance(data["n"], int):
        raise ParseError('element JSON needs an integer "n"')
    rank = data["n"]
    try:
        if "matrix" in data:
            element = from_matrix(rank, data["matrix"])
        elif "word" in data:
            element = from_word(rank, [int(i) for i in data["word"]])
        elif "cremona" in data:
            perm = data.get("perm", list(range(1, rank + 1)))
            element = compose(cremona(rank, data["cremona"]), permutation_element(rank, perm))
        else:
            raise ParseError('element JSON needs one of "matrix", "word", "cremona"')
    except (TypeError, ValueError) as exc:
        if isinstance(exc, WeylError):
            raise
        raise InvalidElementError(f"malformed element data: {exc}") from exc
    canon = json.dumps({"n": rank, "matrix": [list(r) for r in element.matrix]}, separators=(",", ":"))
    return ParsedElement(element, "matrix", canon)
