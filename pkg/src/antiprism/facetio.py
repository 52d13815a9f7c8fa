"""Facet-list text format.

One facet per line, vertices separated by whitespace::

    # the boundary of a triangle
    1 2
    1 3
    2 3

Structured labels use the forms ``{1,2}``, ``({1,2},1)`` and ``~1`` (no spaces
inside a label). Blank lines and ``#`` comments are ignored. A file with no
facets describes the void complex. Parse errors name the offending line.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, TextIO

from .complex import SimplicialComplex
from .errors import MalformedInputError
from .labels import format_label, parse_label


def parse_facets(lines: Iterable[str]) -> SimplicialComplex:
    facets = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        facet = [parse_label(tok, line=lineno) for tok in text.split()]
        if len(set(facet)) != len(facet):
            raise MalformedInputError("repeated vertex in facet", line=lineno)
        facets.append(facet)
    return SimplicialComplex.from_facets(facets)


def read_facets(path: str | Path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_facets(fh)


def format_facets(c: SimplicialComplex) -> str:
    """Deterministic text: facets sorted lexicographically, vertices sorted within."""
    lines = [" ".join(format_label(v) for v in f) for f in c.sorted_facets()]
    return "".join(line + "\n" for line in lines)


def write_facets(c: SimplicialComplex, out: str | Path | TextIO):
    text = format_facets(c)
    if hasattr(out, "write"):
        out.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def write_carrier_json(carrier, path: str | Path):
    Path(path).write_text(json.dumps(carrier.to_json(), indent=2) + "\n",
                          encoding="utf-8")
