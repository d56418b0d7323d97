"""Plain-text polytope format.

    # optional comment lines
    dim 2
    0 0
    1/2 1
    1 0

First significant line declares the ambient dimension; every following
line lists one point as whitespace-separated rationals ('p/q' or 'p').
Vertex order is irrelevant: loading canonicalizes (dedupe, extreme
filter, lex sort). Encoding is UTF-8.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ParseError
from .polytope import VPolytope


def loads_polytope(text: str) -> VPolytope:
    dim: int | None = None
    points: list[list[Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if dim is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "dim":
                raise ParseError("expected header 'dim <n>'", lineno)
            try:
                dim = int(parts[1])
            except ValueError:
                raise ParseError(f"bad dimension {parts[1]!r}", lineno) from None
            if dim < 1:
                raise ParseError("dimension must be >= 1", lineno)
            continue
        tokens = line.split()
        if len(tokens) != dim:
            raise ParseError(
                f"expected {dim} coordinates, found {len(tokens)}", lineno
            )
        row: list[Fraction] = []
        for tok in tokens:
            try:
                row.append(Fraction(tok))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational {tok!r}", lineno) from None
        points.append(row)
    if dim is None:
        raise ParseError("missing 'dim <n>' header")
    if not points:
        raise ParseError("no points given")
    return VPolytope.hull(dim, points)


def load_polytope(path: str) -> VPolytope:
    with open(path, encoding="utf-8") as fh:
        return loads_polytope(fh.read())


def dumps_polytope(poly: VPolytope) -> str:
    lines = [f"dim {poly.dim}"]
    for v in poly.vertices:
        lines.append(" ".join(str(c) for c in v.coords))
    return "\n".join(lines) + "\n"
