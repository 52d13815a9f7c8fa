"""Vertex labels and their deterministic text form.

Base complexes use integers or bare identifiers as vertex labels. Subdivisions
create structured labels:

* ``FaceLabel`` -- a vertex standing for a nonempty face (barycentric and
  stellar subdivisions), written ``{1,2}``;
* ``PointedFace`` -- a face with a distinguished vertex (antiprism
  triangulation, crossing operations), written ``({1,2},1)``;
* ``Antipode`` -- the new vertex opposite to a base vertex in the antiprism
  sphere construction, written ``~1``.

All labels are ordered by :func:`label_key`, which gives a total order across
the different kinds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Iterable

from .errors import MalformedInputError

Label = Any


def label_key(v: Label) -> tuple:
    if isinstance(v, bool):
        raise TypeError("booleans are not vertex labels")
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, FaceLabel):
        return (2, tuple(label_key(u) for u in v.face))
    if isinstance(v, PointedFace):
        return (3, tuple(label_key(u) for u in v.face), label_key(v.point))
    if isinstance(v, Antipode):
        return (4, label_key(v.base))
    raise TypeError(f"unsupported vertex label {v!r}")


def sort_face(face: Iterable[Label]) -> tuple:
    """Vertices of ``face`` as a tuple sorted by :func:`label_key`."""
    return tuple(sorted(face, key=label_key))


def face_key(face: Iterable[Label]) -> tuple:
    """Lexicographic key of a face, used to order face streams."""
    return tuple(label_key(v) for v in sort_face(face))


@dataclass(frozen=True)
class FaceLabel:
    face: tuple

    def __init__(self, face):
        object.__setattr__(self, "face", sort_face(face))
        if not self.face:
            raise MalformedInputError("face labels must be nonempty")

    def __lt__(self, other):
        return label_key(self) < label_key(other)

    def __str__(self):
        return format_label(self)


@dataclass(frozen=True)
class PointedFace:
    face: tuple
    point: Any

    def __init__(self, face, point):
        face = sort_face(face)
        if point not in face:
            raise MalformedInputError(f"point {point!r} is not in face {face!r}")
        object.__setattr__(self, "face", face)
        object.__setattr__(self, "point", point)

    def __lt__(self, other):
        return label_key(self) < label_key(other)

    def __str__(self):
        return format_label(self)


@dataclass(frozen=True)
class Antipode:
    base: Any

    def __lt__(self, other):
        return label_key(self) < label_key(other)

    def __str__(self):
        return format_label(self)


def label_carrier(v: Label) -> frozenset:
    """Support of a label in the complex it was derived from."""
    if isinstance(v, (FaceLabel, PointedFace)):
        return frozenset(v.face)
    return frozenset([v])


def format_label(v: Label) -> str:
    if isinstance(v, FaceLabel):
        return "{" + ",".join(format_label(u) for u in v.face) + "}"
    if isinstance(v, PointedFace):
        inner = ",".join(format_label(u) for u in v.face)
        return "({" + inner + "}," + format_label(v.point) + ")"
    if isinstance(v, Antipode):
        return "~" + format_label(v.base)
    if isinstance(v, (int, str)) and not isinstance(v, bool):
        return str(v)
    raise TypeError(f"unsupported vertex label {v!r}")


_ATOM = re.compile(r"-?\d+|[A-Za-z_][A-Za-z0-9_.]*")


class _Parser:
    def __init__(self, text, line):
        self.text = text
        self.pos = 0
        self.line = line

    def fail(self, what):
        raise MalformedInputError(
            f"{what} at column {self.pos + 1} in {self.text!r}", line=self.line)

    def expect(self, ch):
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def label(self):
        if self.pos >= len(self.text):
            self.fail("unexpected end of label")
        ch = self.text[self.pos]
        if ch == "{":
            return FaceLabel(self.braced())
        if ch == "(":
            self.pos += 1
            face = self.braced()
            self.expect(",")
            point = self.label()
            self.expect(")")
            if point not in face:
                self.fail("point outside its face")
            return PointedFace(face, point)
        if ch == "~":
            self.pos += 1
            return Antipode(self.label())
        m = _ATOM.match(self.text, self.pos)
        if not m:
            self.fail("unrecognised token")
        self.pos = m.end()
        tok = m.group()
        return int(tok) if tok.lstrip("-").isdigit() else tok

    def braced(self):
        self.expect("{")
        items = [self.label()]
        while self.pos < len(self.text) and self.text[self.pos] == ",":
            self.pos += 1
            items.append(self.label())
        self.expect("}")
        if len(set(items)) != len(items):
            self.fail("repeated vertex inside a face label")
        return items


def parse_label(text: str, line: int | None = None) -> Label:
    p = _Parser(text.strip(), line)
    v = p.label()
    if p.pos != len(p.text):
        p.fail("trailing characters")
    return v
