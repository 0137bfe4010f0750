"""Text formats for polytopes.

POLY:   "POLY 1" / "dim <d>" / "vertices <n>" / n rows of d rationals,
        then optionally "labels" followed by n label lines.
HPOLY:  "HPOLY 1" / "dim <d>" / "inequalities <m>" / m rows of d+1 rationals
        meaning a.x <= b with b last.
"""
from __future__ import annotations

from .geometry import Inequality
from .polytopes import HPolytope, VPolytope
from .rationals import format_rat, parse_rat


class FormatError(ValueError):
    pass


def _reader(text):
    lines = [ln.strip() for ln in text.splitlines()]
    return [ln for ln in lines if ln and not ln.startswith("#")]


def _expect(line, keyword):
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword:
        raise FormatError(f"expected '{keyword} <value>', got {line!r}")
    try:
        return int(parts[1])
    except ValueError as exc:
        raise FormatError(f"bad integer in {line!r}") from exc


def write_poly(poly: VPolytope) -> str:
    out = ["POLY 1", f"dim {poly.ambient_dim}", f"vertices {poly.n_vertices}"]
    for p in poly.vertices:
        out.append(" ".join(format_rat(x) for x in p))
    if poly.labels:
        out.append("labels")
        out.extend(poly.labels)
    return "\n".join(out) + "\n"


def read_poly(text: str) -> VPolytope:
    lines = _reader(text)
    if not lines or lines[0] != "POLY 1":
        raise FormatError("missing POLY 1 header")
    d = _expect(lines[1], "dim")
    n = _expect(lines[2], "vertices")
    if len(lines) < 3 + n:
        raise FormatError("truncated vertex block")
    verts = []
    for ln in lines[3 : 3 + n]:
        row = ln.split()
        if len(row) != d:
            raise FormatError(f"vertex row has {len(row)} entries, expected {d}")
        verts.append(tuple(parse_rat(x) for x in row))
    labels = None
    rest = lines[3 + n :]
    if rest:
        if rest[0] != "labels" or len(rest) != 1 + n:
            raise FormatError("malformed labels block")
        labels = tuple(rest[1:])
    return VPolytope(tuple(verts), labels)


def write_hpoly(h: HPolytope) -> str:
    out = ["HPOLY 1", f"dim {h.ambient_dim}", f"inequalities {len(h.inequalities)}"]
    for q in h.inequalities:
        out.append(" ".join(format_rat(c) for c in q.coeffs) + " " + format_rat(q.offset))
    for q in h.equalities:
        out.append(
            "equality "
            + " ".join(format_rat(c) for c in q.coeffs)
            + " "
            + format_rat(q.offset)
        )
    return "\n".join(out) + "\n"


def read_hpoly(text: str) -> HPolytope:
    lines = _reader(text)
    if not lines or lines[0] != "HPOLY 1":
        raise FormatError("missing HPOLY 1 header")
    d = _expect(lines[1], "dim")
    m = _expect(lines[2], "inequalities")
    ineqs, eqs = [], []
    rows = lines[3:]
    if len(rows) < m:
        raise FormatError("truncated inequality block")
    for i, ln in enumerate(rows):
        parts = ln.split()
        is_eq = parts and parts[0] == "equality"
        if is_eq:
            parts = parts[1:]
        elif i >= m:
            raise FormatError("unexpected trailing line")
        if len(parts) != d + 1:
            raise FormatError(f"row has {len(parts)} entries, expected {d + 1}")
        vals = [parse_rat(x) for x in parts]
        q = Inequality(tuple(vals[:-1]), vals[-1])
        (eqs if is_eq else ineqs).append(q)
    if len(ineqs) != m:
        raise FormatError("inequality count mismatch")
    return HPolytope(d, tuple(ineqs), tuple(eqs))


def write_incidence(hull) -> str:
    inc = hull.incidence
    out = ["INC 1", f"facets {inc.n_facets}", f"vertices {inc.n_vertices}"]
    for f in range(inc.n_facets):
        out.append(" ".join(str(v) for v in inc.vertices_of(f)))
    return "\n".join(out) + "\n"
