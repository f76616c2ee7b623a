"""Text formats for ideals, single forms and matrices.

An ideal file starts with a header line

    ring: gf:32003; vars: x0, x1, x2; order: grevlex

followed by one polynomial per line.  ``#`` starts a comment.  Matrix files
use the same optional ring header followed by ``rows: r; cols: c`` and r
lines of ``;``-separated entries.
"""

from __future__ import annotations

import re

from .field import Field
from .ideal import Ideal
from .matrices import PolyMatrix
from .monomial import MonomialOrder
from .parse import ParseError
from .poly import PolyRing, Polynomial, format_poly


class FormatError(ValueError):
    pass


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if body:
            out.append((no, body))
    return out


def _fields(line: str) -> dict[str, str]:
    out = {}
    for part in line.split(";"):
        if ":" not in part:
            raise FormatError(f"malformed header field {part.strip()!r}")
        key, value = part.split(":", 1)
        out[key.strip().lower()] = value.strip()
    return out


def parse_ring_header(line: str) -> PolyRing:
    fields = _fields(line)
    if "vars" not in fields:
        raise FormatError("ring header needs 'vars:'")
    try:
        field = Field.parse(fields.get("ring", "gf:32003"))
        order = MonomialOrder.parse(fields.get("order", "grevlex"))
        names = [n for n in re.split(r"[,\s]+", fields["vars"]) if n]
        return PolyRing(field, names, order)
    except ValueError as exc:
        raise FormatError(f"bad ring header: {exc}") from None


def is_ring_header(line: str) -> bool:
    return bool(re.match(r"\s*(ring|vars)\s*:", line))


def ring_header(ring: PolyRing) -> str:
    return f"ring: {ring.field}; vars: {', '.join(ring.var_names)}; order: {ring.order}"


def _parse_line(ring: PolyRing, no: int, text: str) -> Polynomial:
    try:
        return ring.parse(text)
    except ParseError as exc:
        raise FormatError(f"line {no}: {exc}") from None


def read_ideal(text: str, ring: PolyRing | None = None) -> Ideal:
    lines = _content_lines(text)
    if lines and is_ring_header(lines[0][1]):
        ring = parse_ring_header(lines[0][1])
        lines = lines[1:]
    if ring is None:
        raise FormatError("ideal file has no ring header")
    return Ideal(ring, [_parse_line(ring, no, body) for no, body in lines])


def read_form(text: str, ring: PolyRing | None = None) -> Polynomial:
    ideal = read_ideal(text, ring)
    if len(ideal.generators) != 1:
        raise FormatError(f"expected exactly one nonzero polynomial, found {len(ideal.generators)}")
    return ideal.generators[0]


def format_ideal(ideal: Ideal) -> str:
    lines = [ring_header(ideal.ring)] + [format_poly(g) for g in ideal.generators]
    return "\n".join(lines) + "\n"


def read_matrix(text: str, ring: PolyRing | None = None) -> PolyMatrix:
    lines = _content_lines(text)
    if lines and is_ring_header(lines[0][1]):
        ring = parse_ring_header(lines[0][1])
        lines = lines[1:]
    if ring is None:
        raise FormatError("matrix file has no ring header")
    try:
        return PolyMatrix.from_text(ring, "\n".join(body for _, body in lines))
    except (ValueError, ParseError) as exc:
        raise FormatError(str(exc)) from None


def format_matrix(m: PolyMatrix) -> str:
    return ring_header(m.ring) + "\n" + m.to_text()
