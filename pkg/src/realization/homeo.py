"""Piecewise-linear homeomorphisms with rational breakpoints and their action on points.

Interval maps fix both endpoints and preserve order.  Circle maps are stored
as a lift to R restricted to one period: breakpoints ``(x_i, y_i)`` with
``0 = x_0 < ... < x_k < L`` and ``y_0`` in ``[0, L)``; the lift satisfies
``y(x + L) = y(x) + orientation * L``.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .drinfeld import CutSet, RealizationPoint, as_q, component_map, distance
from .sset import FlavorError


class HomeoError(ValueError):
    pass


@dataclass(frozen=True)
class PLHomeo:
    shape: str
    breakpoints: tuple[tuple[Fraction, Fraction], ...]
    orientation: int = 1
    length: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        L = as_q(self.length)
        object.__setattr__(self, "length", L)
        pts = tuple((as_q(x), as_q(y)) for x, y in self.breakpoints)
        object.__setattr__(self, "breakpoints", pts)
        s = self.orientation
        if self.shape == "interval":
            if s != 1:
                raise HomeoError("interval homeomorphisms preserve order")
            if len(pts) < 2 or pts[0] != (0, 0) or pts[-1] != (L, L):
                raise HomeoError("interval maps must fix both endpoints")
            chain = pts
        elif self.shape == "circle":
            if s not in (1, -1):
                raise HomeoError("orientation is +1 or -1")
            if not pts or pts[0][0] != 0:
                raise HomeoError("circle breakpoints start at x = 0")
            if not 0 <= pts[0][1] < L or pts[-1][0] >= L:
                raise HomeoError("circle breakpoints must be normalized to one period")
            chain = pts + ((pts[0][0] + L, pts[0][1] + s * L),)
        else:
            raise HomeoError(f"unknown shape {self.shape!r}")
        for (x1, y1), (x2, y2) in zip(chain, chain[1:]):
            if x2 <= x1 or s * (y2 - y1) <= 0:
                raise HomeoError("breakpoints are not strictly monotone")

    # constructors ----------------------------------------------------------

    @classmethod
    def identity(cls, shape: str = "interval", length=1) -> "PLHomeo":
        L = as_q(length)
        if shape == "interval":
            return cls("interval", ((0, 0), (L, L)), 1, L)
        return cls("circle", ((0, 0),), 1, L)

    @classmethod
    def interval(cls, points: Sequence, length=1) -> "PLHomeo":
        return _canonical_interval([(as_q(x), as_q(y)) for x, y in points], as_q(length))

    @classmethod
    def circle(cls, points: Sequence, orientation: int = 1, length=1) -> "PLHomeo":
        """From breakpoints of a lift over one period (any starting x)."""
        L = as_q(length)
        pts = sorted((as_q(x), as_q(y)) for x, y in points)
        if not pts:
            raise HomeoError("need at least one breakpoint")
        x0 = pts[0][0]
        if any(x >= x0 + L for x, _ in pts):
            raise HomeoError("breakpoints must span less than one period")
        raw = _RawLift(tuple(pts), orientation, L)
        return _canonical_circle(raw, [x for x, _ in pts] + [0])

    @classmethod
    def rotation(cls, c, length=1) -> "PLHomeo":
        L = as_q(length)
        return cls("circle", ((0, as_q(c) % L),), 1, L)

    @classmethod
    def reflection(cls, c=0, length=1) -> "PLHomeo":
        """x -> c - x."""
        L = as_q(length)
        return cls("circle", ((0, as_q(c) % L),), -1, L)

    # evaluation ------------------------------------------------------------

    def lift(self, x) -> Fraction:
        x = as_q(x)
        if self.shape == "interval":
            if not 0 <= x <= self.length:
                raise HomeoError(f"{x} is outside [0, {self.length}]")
            return _interp(self.breakpoints, x)
        return _RawLift(self.breakpoints, self.orientation, self.length)(x)

    def __call__(self, x) -> Fraction:
        y = self.lift(x)
        return y if self.shape == "interval" else y % self.length

    def inverse_lift(self, y) -> Fraction:
        y = as_q(y)
        if self.shape == "interval":
            if not 0 <= y <= self.length:
                raise HomeoError(f"{y} is outside [0, {self.length}]")
            return _interp([(b, a) for a, b in self.breakpoints], y)
        return _RawLift(self.breakpoints, self.orientation, self.length).inverse(y)

    @property
    def max_slope(self) -> Fraction:
        if self.shape == "interval":
            chain = self.breakpoints
        else:
            s, L = self.orientation, self.length
            chain = self.breakpoints + ((self.breakpoints[0][0] + L, self.breakpoints[0][1] + s * L),)
        return max(abs((y2 - y1) / (x2 - x1)) for (x1, y1), (x2, y2) in zip(chain, chain[1:]))

    # group structure ------------------------------------------------------

    def __matmul__(self, other: "PLHomeo") -> "PLHomeo":
        return compose(self, other)

    def inverse(self) -> "PLHomeo":
        return invert(self)

    def is_identity(self) -> bool:
        return self == PLHomeo.identity(self.shape, self.length)

    def __str__(self) -> str:
        body = ", ".join(f"({x},{y})" for x, y in self.breakpoints)
        if self.shape == "interval":
            return f"pl interval [{body}]" + ("" if self.length == 1 else f" length {self.length}")
        sign = "+" if self.orientation > 0 else "-"
        return f"pl circle {sign} [{body}]" + ("" if self.length == 1 else f" length {self.length}")


def _interp(chain: Sequence[tuple[Fraction, Fraction]], x: Fraction) -> Fraction:
    xs = [a for a, _ in chain]
    i = bisect_right(xs, x) - 1
    if i >= len(chain) - 1:
        return chain[-1][1]
    (x1, y1), (x2, y2) = chain[i], chain[i + 1]
    return y1 + (y2 - y1) * (x - x1) / (x2 - x1)


@dataclass(frozen=True)
class _RawLift:
    """A lift given by breakpoints on [x_0, x_0 + L)."""

    pts: tuple[tuple[Fraction, Fraction], ...]
    orientation: int
    length: Fraction

    def chain(self):
        (x0, y0) = self.pts[0]
        return self.pts + ((x0 + self.length, y0 + self.orientation * self.length),)

    def __call__(self, x: Fraction) -> Fraction:
        x0 = self.pts[0][0]
        w = math.floor((x - x0) / self.length)
        return _interp(self.chain(), x - w * self.length) + self.orientation * w * self.length

    def inverse(self, y: Fraction) -> Fraction:
        s, L = self.orientation, self.length
        y0 = self.pts[0][1]
        chain = [(b, a) for a, b in self.chain()]
        if s > 0:
            w = math.floor((y - y0) / L)
            return _interp(chain, y - w * L) + w * L
        w = math.floor((y0 - y) / L)
        yy = y + w * L  # in (y0 - L, y0]
        return _interp(list(reversed(chain)), yy) + w * L


def _canonical_interval(pts: list[tuple[Fraction, Fraction]], L: Fraction) -> PLHomeo:
    pts = sorted(set(pts))
    out = []
    for p in pts:
        while len(out) >= 2 and _collinear(out[-2], out[-1], p):
            out.pop()
        out.append(p)
    return PLHomeo("interval", tuple(out), 1, L)


def _collinear(a, b, c) -> bool:
    return (b[1] - a[1]) * (c[0] - b[0]) == (c[1] - b[1]) * (b[0] - a[0])


def _canonical_circle(f, xs: Iterable[Fraction]) -> PLHomeo:
    L, s = f.length, f.orientation
    cand = sorted({as_q(x) % L for x in xs} | {Fraction(0)})
    y0 = f(Fraction(0))
    shift = y0 - y0 % L
    pts = [(x, f(x) - shift) for x in cand]
    # drop interior points lying on a straight segment (cyclically)
    changed = True
    while changed and len(pts) > 1:
        changed = False
        ext = pts + [(pts[0][0] + L, pts[0][1] + s * L)]
        for k in range(1, len(pts)):
            if _collinear(ext[k - 1], ext[k], ext[k + 1]):
                del pts[k]
                changed = True
                break
    return PLHomeo("circle", tuple(pts), s, L)


def _check_same(a: PLHomeo, b: PLHomeo) -> None:
    if (a.shape, a.length) != (b.shape, b.length):
        raise HomeoError("homeomorphisms of different shapes")


def compose(a: PLHomeo, b: PLHomeo) -> PLHomeo:
    """a o b."""
    _check_same(a, b)
    if a.shape == "interval":
        xs = {x for x, _ in b.breakpoints} | {b.inverse_lift(x) for x, _ in a.breakpoints}
        return _canonical_interval([(x, a.lift(b.lift(x))) for x in xs], a.length)
    L = a.length
    xs = {x for x, _ in b.breakpoints}
    for x, _ in a.breakpoints:
        xs |= {b.inverse_lift(x + k * L) for k in (-1, 0, 1)}
    f = _Composite(a, b)
    return _canonical_circle(f, xs)


@dataclass(frozen=True)
class _Composite:
    a: PLHomeo
    b: PLHomeo

    @property
    def length(self) -> Fraction:
        return self.a.length

    @property
    def orientation(self) -> int:
        return self.a.orientation * self.b.orientation

    def __call__(self, x: Fraction) -> Fraction:
        return self.a.lift(self.b.lift(x))


@dataclass(frozen=True)
class _Inverse:
    a: PLHomeo

    @property
    def length(self) -> Fraction:
        return self.a.length

    @property
    def orientation(self) -> int:
        return self.a.orientation

    def __call__(self, y: Fraction) -> Fraction:
        return self.a.inverse_lift(y)


def invert(a: PLHomeo) -> PLHomeo:
    if a.shape == "interval":
        return _canonical_interval([(y, x) for x, y in a.breakpoints], a.length)
    return _canonical_circle(_Inverse(a), [y for _, y in a.breakpoints])


def scale(a: PLHomeo, factor) -> PLHomeo:
    """Conjugate by x -> factor * x (so d_r is scale(., 1/r))."""
    c = as_q(factor)
    pts = tuple((x * c, y * c) for x, y in a.breakpoints)
    return PLHomeo(a.shape, pts, a.orientation, a.length * c)


def d_r(a: PLHomeo, r: int) -> PLHomeo:
    return scale(a, Fraction(1, r))


def cover(a: PLHomeo, r: int) -> PLHomeo:
    """Lift a circle map of R/LZ to R/rLZ, commuting with translation by L."""
    if a.shape != "circle":
        raise HomeoError("covers are taken of circle maps")
    L = a.length
    pts = []
    for k in range(r):
        for x, y in a.breakpoints:
            pts.append((x + k * L, y + a.orientation * k * L))
    return _canonical_circle(_RawLift(tuple(pts), a.orientation, r * L), [x for x, _ in pts])


def periodic_interval(a: PLHomeo, r: int) -> PLHomeo:
    """The map of [0, r] acting as ``a`` on every [k, k + 1]."""
    if a.shape != "interval" or a.length != 1:
        raise HomeoError("needs an interval map of [0, 1]")
    pts = {(x + k, y + k) for k in range(r) for x, y in a.breakpoints}
    return _canonical_interval(sorted(pts), Fraction(r))


# --------------------------------------------------------------------------
# action on points


def act(a: PLHomeo, p: RealizationPoint) -> RealizationPoint:
    """ρ_α: move the cuts by α and the element by X̃[α_F^{-1}]."""
    F = p.cuts
    if (a.shape, a.length) != (F.shape, F.length):
        raise HomeoError("homeomorphism and point live on different shapes")
    if a.shape == "interval":
        G = CutSet("interval", tuple(sorted(a(c) for c in F.points)), F.length)
        return RealizationPoint(p.X, G, p.elem)
    if a.orientation < 0 and p.X.kind != "dihedral":
        raise FlavorError("orientation-reversing maps act only on dihedral objects")
    G = CutSet.circle([a(c) for c in F.points], F.length, F.r)
    m = component_map(G, F, a.inverse_lift, p.X.flavor, a.orientation > 0)
    return RealizationPoint(p.X, G, p.X.apply(p.elem, m))


@dataclass
class ModulusReport:
    pairs: list[tuple[Fraction, Fraction]] = field(default_factory=list)
    slope: Fraction = Fraction(1)

    @property
    def max_ratio(self) -> Fraction | None:
        ratios = [after / before for before, after in self.pairs if before]
        return max(ratios, default=None)

    @property
    def within_slope_bound(self) -> bool:
        return all(after <= self.slope * before for before, after in self.pairs if before)

    @property
    def preserves_zero(self) -> bool:
        return all(after == 0 for before, after in self.pairs if before == 0)


def modulus_report(a: PLHomeo, samples: Iterable[tuple[RealizationPoint, RealizationPoint]]) -> ModulusReport:
    """Observed distortion of the metric along sample pairs."""
    rep = ModulusReport(slope=a.max_slope)
    for p, q in samples:
        rep.pairs.append((distance(p, q), distance(act(a, p), act(a, q))))
    return rep


def random_homeo(rng, shape: str = "interval", length=1, orientation: int = 1,
                 pieces: int = 3, denominator: int = 12) -> PLHomeo:
    """A random PL homeomorphism with breakpoints on a 1/denominator grid."""
    L = as_q(length)
    grid = [Fraction(k, denominator) * L for k in range(1, denominator)]
    xs = sorted(rng.sample(grid, min(pieces, len(grid))))
    ys = sorted(rng.sample(grid, len(xs)))
    if shape == "interval":
        return PLHomeo.interval([(0, 0), *zip(xs, ys), (L, L)], L)
    shift = Fraction(rng.randrange(denominator), denominator) * L
    pts = [(Fraction(0), shift)] + [(x, shift + orientation * y) for x, y in zip(xs, ys)]
    return PLHomeo.circle(pts, orientation, L)
