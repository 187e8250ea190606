"""File formats: family/ideal/tree/complex JSON, Macaulay2 text, SVG diagrams."""

from __future__ import annotations

import json
from typing import Any

from .degree_two import INDEX_MAP, DirectedLabeledTree
from .errors import IncompleteFamily
from .isotone import IsotoneFamily, is_ls_edge, validate_family
from .lattice import enumerate_points
from .monomials import Monomial, MonomialIdeal, parse_monomial, var_name
from .polarization import monomial_at
from .simplicial import SimplicialComplex


class FormatError(ValueError):
    """Malformed input file; ``where`` names the offending field."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


# --- families ---------------------------------------------------------------------


def family_to_json(f: IsotoneFamily) -> dict:
    return {
        "m": f.m,
        "n": f.n,
        "X": [{"color": i, "point": list(p), "set": sorted(s)} for i, p, s in f.items()],
    }


def family_from_json(data: Any) -> IsotoneFamily:
    """Parse a family document; raises FormatError naming the bad field."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise FormatError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(data, dict):
        raise FormatError("expected a JSON object", "$")
    for key in ("m", "n", "X"):
        if key not in data:
            raise FormatError("missing field", key)
    m, n = data["m"], data["n"]
    if not (isinstance(m, int) and isinstance(n, int) and m >= 1 and n >= 1):
        raise FormatError("m and n must be positive integers", "m/n")
    if not isinstance(data["X"], list):
        raise FormatError("expected a list", "X")
    mapping = {}
    for k, entry in enumerate(data["X"]):
        where = f"X[{k}]"
        try:
            i = entry["color"]
            p = tuple(entry["point"])
            s = frozenset(entry["set"])
        except (KeyError, TypeError):
            raise FormatError("needs color, point and set", where) from None
        if not all(isinstance(x, int) for x in (i, *p, *s)):
            raise FormatError("color, point and set must hold integers", where)
        if not 1 <= i <= m or len(p) != m or sum(p) != n or min(p) < 0:
            raise FormatError(f"color {i} / point {list(p)} not in Delta_{m}({n})", where)
        if (i, p) in mapping:
            raise FormatError(f"duplicate entry for color {i} at {list(p)}", where)
        mapping[(i, p)] = s
    try:
        f = IsotoneFamily.from_mapping(m, n, mapping)
    except IncompleteFamily as exc:
        raise FormatError(str(exc), "X") from None
    v = validate_family(f)
    if v is not None:
        raise FormatError(v.describe(), f"X[color={v.color}, point={list(v.point)}]")
    return f


def qs_pattern_to_json(q) -> list:
    return [list(c) for c in sorted(q, reverse=True)]


def qs_pattern_from_json(data: Any) -> list:
    if isinstance(data, str):
        data = json.loads(data)
    return [tuple(c) for c in data]


# --- ideals -------------------------------------------------------------------------


def ideal_to_json(ideal: MonomialIdeal) -> dict:
    return {
        "ambient": [list(v) for v in sorted(ideal.ambient)],
        "generators": [[[i, j, e] for (i, j), e in g.exps] for g in ideal.gens],
    }


def ideal_from_json(data: Any) -> MonomialIdeal:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        gens = [Monomial.from_exponents({(i, j): e for i, j, e in g}) for g in data["generators"]]
        ambient = [tuple(v) for v in data["ambient"]] if "ambient" in data else None
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad ideal document ({exc})", "generators") from None
    return MonomialIdeal(gens, ambient)


def ideal_to_text(ideal: MonomialIdeal) -> str:
    """One generator per line, written as products of x_(i,j)."""
    return "".join(f"{g}\n" for g in ideal.gens)


def ideal_from_text(text: str, ambient=None) -> MonomialIdeal:
    gens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip().rstrip(",")
        if not line or line.startswith("--"):
            continue
        try:
            gens.append(parse_monomial(line))
        except ValueError as exc:
            raise FormatError(str(exc), f"line {lineno}") from None
    return MonomialIdeal(gens, ambient)


def ideal_to_m2(ideal: MonomialIdeal, name: str = "I") -> str:
    """Macaulay2 session text defining the ring and the ideal."""
    variables = ", ".join(var_name(v) for v in sorted(ideal.ambient))
    body = ",\n  ".join(str(g) for g in ideal.gens)
    return f"R = QQ[{variables}];\n{name} = ideal(\n  {body}\n);\n"


# --- trees and complexes --------------------------------------------------------------


def tree_to_json(t: DirectedLabeledTree) -> dict:
    return {
        "vertices": t.vertices,
        "edges": [list(e) for e in t.edges],
        "index_map": {str(k): v for k, v in INDEX_MAP.items()},
    }


def tree_from_json(data: Any) -> DirectedLabeledTree:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return DirectedLabeledTree(int(data["vertices"]), tuple(tuple(int(x) for x in e) for e in data["edges"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad tree document ({exc})", "edges") from None


def complex_to_json(c: SimplicialComplex) -> dict:
    def enc(v):
        return list(v) if isinstance(v, tuple) else v

    return {"vertices": [enc(v) for v in c.vertices], "facets": [[enc(v) for v in sorted(f)] for f in c.facets]}


def complex_from_json(data: Any) -> SimplicialComplex:
    if isinstance(data, str):
        data = json.loads(data)

    def dec(v):
        return tuple(v) if isinstance(v, list) else v

    return SimplicialComplex([dec(v) for v in data["vertices"]], [[dec(v) for v in f] for f in data["facets"]])


# --- SVG ------------------------------------------------------------------------------


def _letters(mon: Monomial) -> str:
    return "".join(f"{'xyz'[i - 1]}{j}" for (i, j), _ in mon.exps)


def render_svg(f: IsotoneFamily, spacing: float = 90.0) -> str:
    """Delta_3(n) with solid LS-edges, dashed QS-edges and generator labels.

    The point (n,0,0) sits at the top, (0,n,0) bottom left, (0,0,n) bottom right.
    """
    if f.m != 3:
        raise ValueError("rendering is supported for m = 3 only")
    n = f.n
    h = spacing * 3 ** 0.5 / 2
    margin = 60.0
    width = n * spacing + 2 * margin
    height = n * h + 2 * margin

    def xy(p):
        a, b, c = p
        return margin + n * spacing / 2 + (c - b) * spacing / 2, margin + (n - a) * h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        '<g stroke="black" stroke-width="1.5">',
    ]
    for e in f.simplex.edges():
        (x1, y1), (x2, y2) = (xy(p) for p in e.endpoints)
        dash = "" if is_ls_edge(f, e) else ' stroke-dasharray="4 2" class="qs"'
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"{dash}/>')
    out.append("</g>")
    out.append('<g font-family="serif" font-size="12pt" text-anchor="middle">')
    for p in enumerate_points(3, n):
        x, y = xy(p)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5"/>')
        out.append(f'<text x="{x:.2f}" y="{y - 8:.2f}">{_letters(monomial_at(f, p))}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
