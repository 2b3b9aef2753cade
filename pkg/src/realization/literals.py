"""Text formats: presentations, element expressions, points, PL homeomorphisms.

Presentation grammar (line oriented, UTF-8, ``#`` starts a comment)::

    flavor: simplicial | cyclic | dihedral
    cap: N                      # optional, the table stops at dimension N
    gen NAME dim N
    face NAME i = ELEM
    t NAME = ELEM               # cyclic and dihedral
    w NAME = ELEM               # dihedral only

    ELEM := ("s" INT)* NAME     # s-indices strictly decreasing left to right

Point literals::

    @ {cuts: [1/3, 1/2], elem: "s0 e"}
    @ {cuts: [0, 1/2], elem: "e", shape: circle}
    simplex 2 (1/3, 1/2)        # coordinate shorthand for standard objects
    dihedral 1 - (1/2, 1/4)     # reversed orientation

Homeomorphism literals::

    pl interval [(0,0), (1/2,1/4), (1,1)]
    pl circle - [(0,1/2), (1/4,1/4)] length 2
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from .drinfeld import CircleCoords, CutSet, RealizationPoint, from_coords
from .homeo import PLHomeo
from .sset import (
    DEGEN_RE,
    Element,
    Presentation,
    PresentationError,
    Representable,
    materialize,
    morphism_name,
)

KINDS = ("simplicial", "cyclic", "dihedral")
_S_RE = re.compile(r"^s(\d+)$")


class LiteralError(PresentationError):
    """Malformed text; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


# --------------------------------------------------------------------------
# rationals


def format_q(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_q(text: str) -> Fraction:
    try:
        return Fraction(text.strip().replace("−", "-"))
    except (ValueError, ZeroDivisionError):
        raise LiteralError(f"not a rational: {text.strip()!r}") from None


# --------------------------------------------------------------------------
# elements and presentations


def split_element(text: str) -> tuple[str, tuple[int, ...]]:
    """'s2 s0 x' -> ('x', (0, 2)); the word is stored increasing."""
    toks = text.split()
    if not toks:
        raise LiteralError("empty element expression")
    *degs, name = toks
    idx = []
    for t in degs:
        m = _S_RE.match(t)
        if not m:
            raise LiteralError(f"expected a degeneracy s<i>, got {t!r}")
        idx.append(int(m.group(1)))
    if any(a <= b for a, b in zip(idx, idx[1:])):
        raise LiteralError(f"degeneracy indices must strictly decrease in {text.strip()!r}")
    if DEGEN_RE.match(name):
        raise LiteralError(f"expression {text.strip()!r} has no generator")
    return name, tuple(reversed(idx))


def parse_element(text: str, X: Presentation) -> Element:
    name, word = split_element(text)
    if name not in X.generators:
        raise LiteralError(f"unknown generator {name!r}")
    try:
        return X.element(name, word)
    except PresentationError as exc:
        raise LiteralError(str(exc)) from None


def parse_presentation(text: str, name: str = "X") -> Presentation:
    flavor = None
    cap = None
    gens: list[tuple[str, int]] = []
    pending: list[tuple[int, str, str, int | None, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := re.fullmatch(r"flavor\s*:\s*(\S+)", line):
            if flavor is not None:
                raise LiteralError("flavor given twice", lineno)
            flavor = m.group(1)
            if flavor not in KINDS:
                raise LiteralError(f"unknown flavor {flavor!r}", lineno)
        elif m := re.fullmatch(r"cap\s*:\s*(\d+)", line):
            cap = int(m.group(1))
        elif m := re.fullmatch(r"gen\s+(\S+)\s+dim\s+(\d+)", line):
            gens.append((m.group(1), int(m.group(2))))
        elif m := re.fullmatch(r"face\s+(\S+)\s+(\d+)\s*=\s*(.+)", line):
            pending.append((lineno, "face", m.group(1), int(m.group(2)), m.group(3)))
        elif m := re.fullmatch(r"([tw])\s+(\S+)\s*=\s*(.+)", line):
            pending.append((lineno, m.group(1), m.group(2), None, m.group(3)))
        else:
            raise LiteralError(f"cannot parse {line!r}", lineno)
    if flavor is None:
        raise LiteralError("missing 'flavor:' line")
    dims: dict[str, int] = {}
    for g, d in gens:
        if g in dims:
            raise LiteralError(f"duplicate generator {g!r}")
        dims[g] = d
    faces: dict[str, dict[int, Element]] = {g: {} for g in dims}
    acts: dict[str, dict[str, Element]] = {"t": {}, "w": {}}
    for lineno, what, g, i, expr in pending:
        if g not in dims:
            raise LiteralError(f"unknown generator {g!r}", lineno)
        try:
            target, word = split_element(expr)
        except LiteralError as exc:
            raise LiteralError(str(exc), lineno) from None
        if target not in dims:
            raise LiteralError(f"unknown generator {target!r}", lineno)
        e = Element(target, word, dims[target] + len(word))
        if what == "face":
            if not 0 <= i <= dims[g] or dims[g] == 0:
                raise LiteralError(f"{g} has no face {i}", lineno)
            if i in faces[g]:
                raise LiteralError(f"face {g} {i} given twice", lineno)
            faces[g][i] = e
        else:
            if g in acts[what]:
                raise LiteralError(f"{what} {g} given twice", lineno)
            acts[what][g] = e
    face_lists = {}
    for g, d in dims.items():
        missing = [i for i in range(d + 1) if i not in faces[g]] if d else []
        if missing:
            raise LiteralError(f"generator {g!r} lacks faces {missing}")
        face_lists[g] = [faces[g][i] for i in range(d + 1)] if d else []
    return Presentation(flavor, gens, face_lists, acts["t"], acts["w"], cap=cap, name=name)


def format_presentation(X: Presentation) -> str:
    lines = [f"flavor: {X.kind}"]
    if X.cap is not None:
        lines.append(f"cap: {X.cap}")
    for g, d in X.generators.items():
        lines.append(f"gen {g} dim {d}")
    for g, d in X.generators.items():
        for i, e in enumerate(X.faces[g]):
            lines.append(f"face {g} {i} = {e}")
        if X.kind != "simplicial":
            lines.append(f"t {g} = {X.t[g]}")
        if X.kind == "dihedral":
            lines.append(f"w {g} = {X.w[g]}")
    return "\n".join(lines) + "\n"


def load_presentation(path, name: str | None = None) -> Presentation:
    from pathlib import Path

    p = Path(path)
    return parse_presentation(p.read_text(encoding="utf-8"), name or p.stem)


# --------------------------------------------------------------------------
# points


_POINT_RE = re.compile(r"@\s*\{(.*)\}\s*", re.S)
_COORD_RE = re.compile(r"(simplex|cyclic|dihedral)\s+(\d+)\s*([+\-−])?\s*\((.*)\)\s*")


def _q_list(body: str) -> list[Fraction]:
    body = body.strip()
    return [parse_q(x) for x in body.split(",")] if body else []


@lru_cache(maxsize=None)
def _standard_ez(kind: str, n: int) -> dict:
    R = Representable(kind, n)
    top = n if kind == "simplicial" else n + 1
    return materialize(R, top + 3, complete=True, name_fn=morphism_name)[1]


def _to_presentation(p: RealizationPoint, X: Presentation) -> RealizationPoint:
    R = p.X
    ez = _standard_ez(R.kind, R.n)
    e = ez.get(p.elem)
    if e is None or e.generator not in X.generators:
        raise LiteralError(f"coordinates need the standard {R.kind} {R.n}-object")
    return RealizationPoint(X, p.cuts, parse_element(str(e), X))


def parse_point(text: str, X: Presentation) -> RealizationPoint:
    text = text.strip()
    if m := _COORD_RE.fullmatch(text):
        kind, n, sign, body = m.group(1), int(m.group(2)), m.group(3), m.group(4)
        xs = _q_list(body)
        try:
            if kind == "simplex":
                if sign:
                    raise LiteralError("simplex coordinates carry no orientation")
                p = from_coords(kind, n, xs)
            else:
                p = from_coords(kind, n, CircleCoords(tuple(xs), -1 if sign in ("-", "−") else 1))
        except ValueError as exc:
            raise LiteralError(str(exc)) from None
        return _to_presentation(p, X)
    m = _POINT_RE.fullmatch(text)
    if not m:
        raise LiteralError(f"not a point literal: {text!r}")
    fields = {}
    for fm in re.finditer(r'(\w+)\s*:\s*(\[[^\]]*\]|"[^"]*"|\w+)', m.group(1)):
        fields[fm.group(1)] = fm.group(2)
    if "cuts" not in fields or "elem" not in fields:
        raise LiteralError("a point needs cuts and elem")
    extra = set(fields) - {"cuts", "elem", "shape"}
    if extra:
        raise LiteralError(f"unknown point fields {sorted(extra)}")
    cuts = _q_list(fields["cuts"].strip("[]"))
    elem = parse_element(fields["elem"].strip('"'), X)
    shape = fields.get("shape", "interval")
    try:
        if shape == "interval":
            F = CutSet("interval", tuple(cuts))
        elif shape == "circle":
            F = CutSet("circle", tuple(cuts))
        else:
            raise LiteralError(f"unknown shape {shape!r}")
        return RealizationPoint(X, F, elem)
    except ValueError as exc:
        raise LiteralError(str(exc)) from None


def format_point(p: RealizationPoint) -> str:
    cuts = ", ".join(format_q(c) for c in p.cuts.points)
    tail = ", shape: circle" if p.cuts.shape == "circle" else ""
    return f'@ {{cuts: [{cuts}], elem: "{p.elem}"{tail}}}'


# --------------------------------------------------------------------------
# homeomorphisms

_PL_RE = re.compile(r"pl\s+(interval|circle)\s*([+\-−])?\s*\[(.*)\]\s*(?:length\s+(\S+))?\s*", re.S)


def parse_homeo(text: str) -> PLHomeo:
    m = _PL_RE.fullmatch(text.strip())
    if not m:
        raise LiteralError(f"not a homeomorphism literal: {text.strip()!r}")
    shape, sign, body, length = m.groups()
    pairs = re.findall(r"\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)", body)
    if not pairs or re.sub(r"\([^()]*\)|[\s,]", "", body):
        raise LiteralError("breakpoints are a list of (x, y) pairs")
    pts = [(parse_q(x), parse_q(y)) for x, y in pairs]
    L = parse_q(length) if length else Fraction(1)
    try:
        if shape == "interval":
            if sign:
                raise LiteralError("interval maps carry no orientation sign")
            return PLHomeo.interval(pts, L)
        return PLHomeo.circle(pts, -1 if sign in ("-", "−") else 1, L)
    except ValueError as exc:
        raise LiteralError(str(exc)) from None


def format_homeo(a: PLHomeo) -> str:
    return str(a)


def bundled_names() -> list[str]:
    from importlib.resources import files

    return sorted(p.name[:-5] for p in files("realization.data").iterdir() if p.name.endswith(".pres"))


def bundled(name: str) -> Presentation:
    """One of the presentations shipped in ``realization/data``."""
    from importlib.resources import files

    res = files("realization.data") / f"{name}.pres"
    if not res.is_file():
        raise LiteralError(f"no bundled presentation {name!r}; have {bundled_names()}")
    return parse_presentation(res.read_text(encoding="utf-8"), name)
