"""Text formats: chirotope sign strings, rational point lists and map JSON."""
from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from pathlib import Path

from .errors import ParseError
from .realization import PointConfig
from .signs import Chirotope

CHIROTOPE_HEADER_COMMENT = "# signs of sorted r-tuples over 1..n in lexicographic order"
MAP_FORMAT = "rank4om-map/1"


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s and not s.startswith("#"):
            out.append((no, s))
    return out


def _header(lines, what: str) -> tuple[int, int]:
    if not lines:
        raise ParseError(f"{what}: missing header")
    no, head = lines[0]
    parts = head.split(" ")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"{what}: malformed header on line {no}: {head!r}")
    return int(parts[0]), int(parts[1])


def parse_chirotope(text: str) -> Chirotope:
    """Parse "n r" followed by a sign string over {+,-,0}; validity is not checked."""
    lines = _content_lines(text)
    n, r = _header(lines, "chirotope")
    if r < 1 or n < r:
        raise ParseError(f"chirotope: need 1 <= r <= n, got n={n}, r={r}")
    body = "".join("".join(s.split()) for _, s in lines[1:])
    for i, c in enumerate(body):
        if c not in "+-0":
            raise ParseError(f"chirotope: illegal character {c!r} at position {i}")
    want = comb(n, r)
    if len(body) != want:
        raise ParseError(f"chirotope: expected {want} signs for C({n},{r}), got {len(body)}")
    return Chirotope.from_string(n, r, body)


def serialize_chirotope(chi: Chirotope) -> str:
    return f"{CHIROTOPE_HEADER_COMMENT}\n{chi.n} {chi.rank}\n{chi.sign_string()}\n"


def _rational(tok: str, no: int) -> Fraction:
    try:
        if "/" in tok:
            p, q = tok.split("/")
            if not q or int(q) == 0:
                raise ValueError
            return Fraction(int(p), int(q))
        return Fraction(int(tok))
    except ValueError:
        raise ParseError(f"points: bad rational {tok!r} on line {no}") from None


def parse_points(text: str) -> PointConfig:
    """Parse "n 3" followed by n lines of three rationals p/q."""
    lines = _content_lines(text)
    n, d = _header(lines, "points")
    if d != 3:
        raise ParseError(f"points: dimension must be 3, got {d}")
    rows = lines[1:]
    if len(rows) != n:
        raise ParseError(f"points: expected {n} point lines, got {len(rows)}")
    pts = []
    for no, s in rows:
        toks = s.split()
        if len(toks) != 3:
            raise ParseError(f"points: line {no} needs 3 coordinates, got {len(toks)}")
        pts.append(tuple(_rational(t, no) for t in toks))
    return PointConfig(pts)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize_points(P: PointConfig) -> str:
    body = "\n".join(" ".join(_fmt(c) for c in p) for p in P.points)
    return f"{P.n} 3\n{body}\n"


def load_map(text: str):
    from .arrangement.ppc import PPCConfiguration

    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"map: invalid JSON: {exc}") from None
    if not isinstance(data, dict) or data.get("format") != MAP_FORMAT:
        raise ParseError(f"map: expected format {MAP_FORMAT!r}")
    try:
        return PPCConfiguration.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"map: {exc}") from None


def dump_map(cfg) -> str:
    return json.dumps(cfg.to_dict(), sort_keys=True, indent=1) + "\n"


def read_input(path: str | Path):
    """Load a chirotope, point or map file, dispatching on content."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return load_map(text)
    lines = _content_lines(text)
    if len(lines) >= 2 and len(lines[1][1].split()) == 3:
        return parse_points(text)
    return parse_chirotope(text)
