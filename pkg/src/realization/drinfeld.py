"""Points of a realization as elements over finite rational cut sets.

A point over the interval [0, L] is a finite set F of interior cuts plus an
element of X[|F|]; its components are ordered left to right.  A point over the
circle R/LZ needs at least one cut; the arcs are ordered counterclockwise
starting with the arc that begins at the least cut in [0, L).  With r > 1 the
circle frame describes a Δ_rC- or Δ_rD-set: cut sets are then invariant under
translation by 1, and an element lives in level (#arcs / r) - 1.

Maps between component sets are computed from point maps on the universal
cover: each component is sent to the component containing the image of its
midpoint.  Refinements use the identity map; homeomorphisms use the inverse
lift (see :mod:`realization.homeo`).
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .crossed import CrossedMorphism, Flavor, IntegerMapModel, from_integer_map, to_integer_map
from .delta import OrdinalMap, canonical_iso, identity
from .sset import FlavorError, Representable, SimplicialObject

Q = Fraction
DEFAULT_SUBSET_BOUND = 14


class ShapeError(ValueError):
    pass


class CapacityError(ValueError):
    pass


def as_q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# --------------------------------------------------------------------------
# cut sets


@dataclass(frozen=True)
class CutSet:
    shape: str
    points: tuple[Fraction, ...]
    length: Fraction = Fraction(1)
    r: int = 1

    def __post_init__(self) -> None:
        if self.shape not in ("interval", "circle"):
            raise ShapeError(f"unknown shape {self.shape!r}")
        pts = tuple(as_q(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "length", as_q(self.length))
        if self.length <= 0:
            raise ShapeError("length must be positive")
        if any(a >= b for a, b in zip(pts, pts[1:])):
            raise ShapeError("cut points must be strictly increasing")
        if self.shape == "interval":
            if self.r != 1:
                raise ShapeError("interval frames carry no r")
            if pts and (pts[0] <= 0 or pts[-1] >= self.length):
                raise ShapeError("interval cuts must be interior points")
        else:
            if not pts:
                raise ShapeError("a circle cut set must be nonempty")
            if pts[0] < 0 or pts[-1] >= self.length:
                raise ShapeError("circle cuts must lie in [0, length)")
            if self.r > 1:
                if self.length != self.r:
                    raise ShapeError("periodic frames live on R/rZ")
                s = set(pts)
                if any(((p + 1) % self.length) not in s for p in pts):
                    raise ShapeError("cut set is not invariant under translation by 1")

    @classmethod
    def interval(cls, points: Iterable = (), length=1) -> "CutSet":
        L = as_q(length)
        pts = sorted({as_q(p) for p in points if 0 < as_q(p) < L})
        for p in points:
            if not 0 <= as_q(p) <= L:
                raise ShapeError(f"{p} is outside [0, {L}]")
        return cls("interval", tuple(pts), L)

    @classmethod
    def circle(cls, points: Iterable, length=1, r: int = 1) -> "CutSet":
        L = as_q(length)
        return cls("circle", tuple(sorted({as_q(p) % L for p in points})), L, r)

    @classmethod
    def periodic(cls, points: Iterable, r: int) -> "CutSet":
        """The translates by 0, ..., r-1 of cuts in [0, 1) on R/rZ."""
        base = {as_q(p) % 1 for p in points}
        return cls.circle([p + k for p in base for k in range(r)], r, r)

    # components -----------------------------------------------------------

    @property
    def count(self) -> int:
        return len(self.points) + (1 if self.shape == "interval" else 0)

    @property
    def level(self) -> int:
        if self.shape == "interval":
            return len(self.points)
        return len(self.points) // self.r - 1

    def components(self) -> list[tuple[Fraction, Fraction]]:
        if self.shape == "interval":
            bounds = (Fraction(0),) + self.points + (self.length,)
            return list(zip(bounds, bounds[1:]))
        pts = self.points
        return [(pts[i], pts[i + 1] if i + 1 < len(pts) else pts[0] + self.length)
                for i in range(len(pts))]

    def lengths(self) -> list[Fraction]:
        return [b - a for a, b in self.components()]

    def arc(self, j: int) -> tuple[Fraction, Fraction]:
        """Lifted component ``j`` (any integer on the circle)."""
        if self.shape == "interval":
            return self.components()[j]
        q, i = divmod(j, len(self.points))
        a, b = self.components()[i]
        return a + q * self.length, b + q * self.length

    def index(self, y: Fraction) -> int:
        """Component (lifted index on the circle) containing the non-cut point ``y``."""
        if self.shape == "interval":
            if not 0 < y < self.length or y in self.points:
                raise ShapeError(f"{y} is not in the complement of the cuts")
            return bisect_left(self.points, y)
        p0 = self.points[0]
        w = math.floor((y - p0) / self.length)
        yy = y - w * self.length
        i = bisect_right(self.points, yy) - 1
        if self.points[i] == yy:
            raise ShapeError(f"{y} is a cut point")
        return i + len(self.points) * w

    def window(self) -> int:
        """Number of components in one period of the index object."""
        return self.count if self.shape == "interval" else len(self.points) // self.r

    def union(self, other: "CutSet") -> "CutSet":
        self._same_frame(other)
        return CutSet(self.shape, tuple(sorted(set(self.points) | set(other.points))), self.length, self.r)

    def issubset(self, other: "CutSet") -> bool:
        self._same_frame(other)
        return set(self.points) <= set(other.points)

    def without(self, c: Fraction) -> "CutSet":
        drop = {c}
        if self.shape == "circle" and self.r > 1:
            drop = {(c + k) % self.length for k in range(self.r)}
        return CutSet(self.shape, tuple(p for p in self.points if p not in drop), self.length, self.r)

    def orbit_representatives(self) -> list[Fraction]:
        if self.shape == "circle" and self.r > 1:
            return [p for p in self.points if p < 1]
        return list(self.points)

    def scaled(self, factor: Fraction, r: int = 1) -> "CutSet":
        return CutSet(self.shape, tuple(p * factor for p in self.points), self.length * factor, r)

    def _same_frame(self, other: "CutSet") -> None:
        if (self.shape, self.length, self.r) != (other.shape, other.length, other.r):
            raise ShapeError("cut sets live on different shapes")


def measure(F: CutSet, A: Iterable[int] | None = None) -> Fraction:
    lengths = F.lengths()
    if A is None:
        return sum(lengths, Fraction(0))
    return sum((lengths[i] for i in A), Fraction(0))


def extend(X: SimplicialObject, components: Sequence) -> tuple[int, list, dict]:
    """X̃[A] for a finite ordered set of components: (level, X[level], relabeling)."""
    if not components:
        raise ValueError("X̃ is not defined on the empty order")
    rel = canonical_iso(components)
    level = len(components) - 1
    return level, X.elements(level), rel


# --------------------------------------------------------------------------
# maps between component sets


def component_map(G: CutSet, F: CutSet, h: Callable[[Fraction], Fraction], flavor: Flavor | None,
                  covariant: bool = True):
    """The map π0(G) -> π0(F) induced by a lifted point map ``h``.

    On the interval the result is an order map; on the circle a crossed
    morphism of ``flavor`` (contravariant when ``covariant`` is false).
    """
    if G.shape == "interval":
        if not covariant:
            raise ShapeError("interval maps preserve orientation")
        vals = tuple(F.index(h((a + b) / 2)) for a, b in G.components())
        return OrdinalMap(G.count - 1, F.count - 1, vals)
    if flavor is None:
        raise FlavorError("circle frames need a cyclic or dihedral object")
    vals = []
    for j in range(G.window()):
        a, b = G.arc(j)
        vals.append(F.index(h((a + b) / 2)))
    model = IntegerMapModel(G.level, F.level, tuple(vals), covariant, G.r)
    return from_integer_map(model, flavor)


def refinement_map(F: CutSet, G: CutSet, flavor: Flavor | None = None):
    """π0(shape∖G) -> π0(shape∖F) for F ⊆ G."""
    if not F.issubset(G):
        raise ShapeError("refinement needs F ⊆ G")
    if G.shape == "circle" and flavor is None:
        flavor = Flavor("C", G.r)
    return component_map(G, F, lambda y: y, flavor)


def section_map(F: CutSet, G: CutSet, flavor: Flavor | None = None):
    """A right inverse π0(shape∖F) -> π0(shape∖G) of the refinement map, for F ⊆ G.

    Each component of F goes to the first component of G inside it.
    """
    if not F.issubset(G):
        raise ShapeError("section needs F ⊆ G")
    if G.shape == "circle" and flavor is None:
        flavor = Flavor("C", G.r)
    if F.shape == "interval":
        vals = []
        for a, b in F.components():
            nxt = next((p for p in G.points if p > a), b)
            vals.append(G.index((a + min(nxt, b)) / 2))
        return OrdinalMap(F.count - 1, G.count - 1, tuple(vals))
    vals = [_first_arc_starting_at(G, F.arc(j)[0]) for j in range(F.window())]
    model = IntegerMapModel(F.level, G.level, tuple(vals), True, G.r)
    return from_integer_map(model, flavor)


def _first_arc_starting_at(G: CutSet, a: Fraction) -> int:
    """Lifted index of the arc of G whose start is the lifted cut ``a``."""
    L = G.length
    w = math.floor((a - G.points[0]) / L)
    i = G.points.index(a - w * L)
    return i + len(G.points) * w


# --------------------------------------------------------------------------
# points


@dataclass(frozen=True, eq=False)
class RealizationPoint:
    X: SimplicialObject
    cuts: CutSet
    elem: object

    def __post_init__(self) -> None:
        if self.X.dim(self.elem) != self.cuts.level:
            raise ValueError(f"element of dimension {self.X.dim(self.elem)} over {self.cuts.count} components")
        if self.cuts.shape == "circle":
            fl = self.X.flavor
            if fl is None:
                raise FlavorError("circle points need a cyclic or dihedral object")
            if fl.r != self.cuts.r:
                raise FlavorError("object and frame disagree on r")
        elif self.X.r != 1:
            raise FlavorError("Δ_r-objects are realized on the circle")

    def __eq__(self, other) -> bool:
        return (isinstance(other, RealizationPoint) and self.X == other.X
                and self.cuts == other.cuts and self.elem == other.elem)

    def __hash__(self) -> int:
        return hash((self.cuts, self.elem))

    def __repr__(self) -> str:
        pts = ", ".join(str(p) for p in self.cuts.points)
        return f"Point({self.cuts.shape}[{pts}] : {self.elem})"


def point(X: SimplicialObject, cuts: CutSet | Iterable, elem, shape: str = "interval") -> RealizationPoint:
    if not isinstance(cuts, CutSet):
        cuts = CutSet.interval(cuts) if shape == "interval" else CutSet.circle(cuts)
    return RealizationPoint(X, cuts, elem)


def _flavor(p: RealizationPoint) -> Flavor | None:
    return p.X.flavor if p.cuts.shape == "circle" else None


def push_forward(p: RealizationPoint, G: CutSet) -> RealizationPoint:
    if G == p.cuts:
        return p
    rho = refinement_map(p.cuts, G, _flavor(p))
    return RealizationPoint(p.X, G, p.X.apply(p.elem, rho))


def restrict(p: RealizationPoint, A: Iterable[int]):
    """Image of p.elem in X̃[A] for a nonempty set of component indices."""
    idx = sorted(set(A))
    if not idx:
        raise ValueError("restriction to the empty set of components")
    if idx[0] < 0 or idx[-1] >= p.cuts.count:
        raise ValueError("component index out of range")
    if p.cuts.shape == "circle" and p.cuts.r > 1:
        raise FlavorError("restriction is defined on r = 1 frames")
    inc = OrdinalMap(len(idx) - 1, p.cuts.count - 1, tuple(idx))
    return p.X.apply(p.elem, inc)


def _removable(p: RealizationPoint, c: Fraction) -> RealizationPoint | None:
    F = p.cuts
    if F.shape == "circle" and len(F.points) <= F.r:
        return None
    Fs = F.without(c)
    fl = _flavor(p)
    y = p.X.apply(p.elem, section_map(Fs, F, fl))
    if p.X.apply(y, refinement_map(Fs, F, fl)) == p.elem:
        return RealizationPoint(p.X, Fs, y)
    return None


def normalize(p: RealizationPoint) -> RealizationPoint:
    """The representative over the least cut set (unique by injectivity of pushes)."""
    changed = True
    while changed:
        changed = False
        for c in p.cuts.orbit_representatives():
            q = _removable(p, c)
            if q is not None:
                p, changed = q, True
                break
    return anchor(p)


def anchor(p: RealizationPoint) -> RealizationPoint:
    """Move a lone circle cut (orbit) to 0 when the class allows it.

    A minimal circle representative keeps at least one cut, and for a lone cut
    its position can be free (a vertex of Λ[0] sits anywhere), so the
    position is fixed canonically.
    """
    F = p.cuts
    if F.shape != "circle" or len(F.points) != F.r or F.points[0] == 0:
        return p
    zero = CutSet.periodic([0], F.r) if F.r > 1 else CutSet.circle([0], F.length)
    q = _removable(push_forward(p, F.union(zero)), F.points[0])
    return p if q is None else q


def common(p: RealizationPoint, q: RealizationPoint) -> tuple[RealizationPoint, RealizationPoint]:
    if p.X != q.X:
        raise ValueError("points of different objects")
    G = p.cuts.union(q.cuts)
    return push_forward(p, G), push_forward(q, G)


def equal(p: RealizationPoint, q: RealizationPoint) -> bool:
    a, b = common(p, q)
    return a.elem == b.elem


def distance(p: RealizationPoint, q: RealizationPoint, bound: int = DEFAULT_SUBSET_BOUND) -> Fraction:
    """min μ(π0 ∖ A) over nonempty A on which p and q restrict to the same element."""
    a, b = common(p, q)
    F = a.cuts
    total = measure(F)
    if a.elem == b.elem:
        return Fraction(0)
    k = F.count
    if k > bound:
        raise CapacityError(f"{k} components exceed the subset bound {bound}")
    lengths = F.lengths()
    order = sorted(range(k), key=lambda i: -lengths[i])
    suffix = [Fraction(0)] * (k + 1)
    for pos in range(k - 1, -1, -1):
        suffix[pos] = suffix[pos + 1] + lengths[order[pos]]
    best = [Fraction(0)]
    chosen: list[int] = []

    def agree(idx: list[int]) -> bool:
        return restrict(a, idx) == restrict(b, idx)

    def search(pos: int, mass: Fraction) -> None:
        if mass > best[0]:
            best[0] = mass
        if pos == k or mass + suffix[pos] <= best[0]:
            return
        i = order[pos]
        chosen.append(i)
        # valid sets are closed under shrinking, so an invalid set kills the branch
        if agree(chosen):
            search(pos + 1, mass + lengths[i])
        chosen.pop()
        search(pos + 1, mass)

    search(0, Fraction(0))
    if best[0] == 0:
        return total
    return total - best[0]


# --------------------------------------------------------------------------
# coordinates on standard objects


@dataclass(frozen=True)
class CircleCoords:
    """Lifted coordinates x_0 in [0, L) and x_1..x_n monotone within one turn.

    Orientation +1: x_0 <= x_1 <= ... <= x_n <= x_0 + L.
    Orientation -1: x_0 >= x_1 >= ... >= x_n >= x_0 - L.
    """

    points: tuple[Fraction, ...]
    orientation: int = 1
    length: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        pts = tuple(as_q(x) for x in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "length", as_q(self.length))
        if self.orientation not in (1, -1):
            raise ValueError("orientation is +1 or -1")
        if not pts:
            raise ValueError("need at least x_0")
        if not 0 <= pts[0] < self.length:
            raise ValueError("x_0 must lie in [0, L)")
        s = self.orientation
        chain = pts + (pts[0] + s * self.length,)
        if any(s * (b - a) < 0 for a, b in zip(chain, chain[1:])):
            raise ValueError("coordinates are not in cyclic order")

    @classmethod
    def from_circle(cls, values: Sequence, orientation: int = 1, length=1) -> "CircleCoords":
        """Lift points of R/LZ greedily; coincident points stay together."""
        L = as_q(length)
        vals = [as_q(v) % L for v in values]
        out = [vals[0]]
        for v in vals[1:]:
            prev = out[-1]
            if orientation > 0:
                out.append(prev + (v - prev) % L)
            else:
                out.append(prev - (prev - v) % L)
        return cls(tuple(out), orientation, L)


def _standard(X: SimplicialObject | None, kind: str, n: int) -> SimplicialObject:
    if X is None:
        return Representable(kind, n)
    if not isinstance(X, Representable) or X.kind != kind or X.n != n:
        raise ValueError("coordinates need the matching standard object")
    return X


def from_coords(kind: str, n: int, coords, X: Representable | None = None) -> RealizationPoint:
    """The step-function point f^x of a standard object.

    ``kind`` is simplex/simplicial (``coords`` = x_1 <= ... <= x_n in [0, 1]),
    or cyclic/dihedral (``coords`` a :class:`CircleCoords` with n + 1 entries).
    """
    kind = {"simplex": "simplicial"}.get(kind, kind)
    X = _standard(X, kind, n)
    if kind == "simplicial":
        xs = [as_q(x) for x in coords]
        if len(xs) != n:
            raise ValueError(f"need {n} coordinates")
        if any(not 0 <= x <= 1 for x in xs) or any(a > b for a, b in zip(xs, xs[1:])):
            raise ValueError("coordinates must be weakly increasing in [0, 1]")
        F = CutSet.interval(xs)
        vals = tuple(sum(1 for x in xs if x < (a + b) / 2) for a, b in F.components())
        return RealizationPoint(X, F, OrdinalMap(F.count - 1, n, vals))
    if not isinstance(coords, CircleCoords):
        coords = CircleCoords(tuple(coords))
    if len(coords.points) != n + 1:
        raise ValueError(f"need {n + 1} coordinates")
    if coords.length != 1:
        raise ValueError("standard objects live on R/Z")
    if coords.orientation < 0 and kind != "dihedral":
        raise FlavorError("reversed coordinates need the dihedral object")
    F = CutSet.circle(coords.points)
    f = _lifted_step(coords, n)
    vals = []
    for j in range(F.window()):
        a, b = F.arc(j)
        vals.append(f((a + b) / 2))
    model = IntegerMapModel(F.level, n, tuple(vals), coords.orientation > 0)
    return RealizationPoint(X, F, from_integer_map(model, X.flavor))


def _lifted_step(c: CircleCoords, n: int) -> Callable[[Fraction], int]:
    """The monotone lift Z-valued f^x with f(t + 1) = f(t) ± (n + 1)."""
    pts = c.points
    x0 = pts[0]
    if c.orientation > 0:
        ends = list(pts[1:]) + [x0 + 1]

        def f(t: Fraction) -> int:
            w = math.floor(t - x0)
            u = t - w
            i = sum(1 for e in ends if e < u)
            return i + (n + 1) * w
    else:
        ends = list(pts[1:]) + [x0 - 1]

        def f(t: Fraction) -> int:
            w = math.floor(x0 - t)
            u = t + w  # u in (x0 - 1, x0]
            i = sum(1 for e in ends if e > u)
            return i + (n + 1) * w
    return f


def to_coords(p: RealizationPoint):
    """Inverse of :func:`from_coords`; tuples for simplices, CircleCoords otherwise."""
    X = p.X
    if not isinstance(X, Representable):
        raise ValueError("coordinates are defined on standard objects")
    n = X.n
    if X.kind == "simplicial":
        vals = p.elem.values
        starts = [Fraction(0)] + list(p.cuts.points)
        out = []
        for i in range(1, n + 1):
            j = next((k for k, v in enumerate(vals) if v >= i), None)
            out.append(Fraction(1) if j is None else starts[j])
        return tuple(out)
    F = p.cuts
    f = to_integer_map(p.elem)
    if f.covariant:
        # x_i starts the first lifted arc with value >= i
        j0 = 0
        while f(j0) < 0:
            j0 += 1
        while f(j0 - 1) >= 0:
            j0 -= 1
        pts = []
        j = j0
        for i in range(n + 1):
            while f(j) < i:
                j += 1
            pts.append(F.arc(j)[0])
        sign = 1
    else:
        # x_i ends the last lifted arc with value >= i
        j0 = 0
        while f(j0) < 0:
            j0 -= 1
        while f(j0 + 1) >= 0:
            j0 += 1
        pts = []
        j = j0
        for i in range(n + 1):
            while f(j) < i:
                j -= 1
            pts.append(F.arc(j)[1])
        sign = -1
    off = pts[0] - pts[0] % F.length
    return CircleCoords(tuple(x - off for x in pts), sign, F.length)
