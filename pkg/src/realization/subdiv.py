"""Edgewise subdivisions and the maps they induce on realizations.

``sd_r`` sends [n] to [r(n+1) - 1]; on the integer grid a Δ_rC- or Δ_rD-morphism
and its subdivision are the same function Z -> Z, only the levels change.
``sd^e`` (Segal's doubling) sends [n] to [2n+1] with ``f^e`` symmetric under
the reversal k -> 2n+1-k.

A point of a subdivided object carries its element over unchanged; only the
cut set moves.  Over the interval a cut set F becomes

* ``sd_r``:  {(a + x)/r : 0 <= a < r, x in F ∪ {0, 1}}
* ``sd^e_r``: {(2a + x)/2r, (2a + 2 - x)/2r : 0 <= a < r, x in F ∪ {0, 1}} on the circle,

and over R/rZ (1-periodic cuts) the map is x -> x/r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .crossed import (
    CrossedMorphism,
    Flavor,
    GroupElement,
    IntegerMapModel,
    from_integer_map,
    to_integer_map,
)
from .delta import OrdinalMap, compose_ord
from .drinfeld import (
    CutSet,
    RealizationPoint,
    as_q,
    equal,
    normalize,
    push_forward,
)
from .homeo import PLHomeo, act, scale
from .sset import (
    FlavorError,
    Presentation,
    SimplicialObject,
    materialize,
    validate,
)


class SubdivisionError(ValueError):
    pass


# --------------------------------------------------------------------------
# index-category functors


def sd_r_map(f: OrdinalMap, r: int) -> OrdinalMap:
    """sd_r[f](a(m+1) + b) = a(n+1) + f(b)."""
    m, n = f.source, f.target
    vals = tuple(a * (n + 1) + f(b) for a in range(r) for b in range(m + 1))
    return OrdinalMap(r * (m + 1) - 1, r * (n + 1) - 1, vals)


def sd_e_map(f: OrdinalMap) -> OrdinalMap:
    """f^e(k) = f(k), f^e(2m+1-k) = 2n+1-f(k)."""
    m, n = f.source, f.target
    vals = [0] * (2 * m + 2)
    for k in range(m + 1):
        vals[k] = f(k)
        vals[2 * m + 1 - k] = 2 * n + 1 - f(k)
    return OrdinalMap(2 * m + 1, 2 * n + 1, tuple(vals))


def sd_r_crossed(m: CrossedMorphism, r: int | None = None) -> CrossedMorphism:
    """Δ_rC -> ΔC (or Δ_rD -> ΔD): conjugation by x -> x/r, i.e. relabel the grid."""
    r = m.flavor.r if r is None else r
    if m.flavor.r != r:
        raise SubdivisionError(f"morphism lives in r={m.flavor.r}, not {r}")
    f = to_integer_map(m)
    src, tgt = r * (m.source + 1) - 1, r * (m.target + 1) - 1
    model = IntegerMapModel(src, tgt, tuple(f(j) for j in range(src + 1)), f.covariant, 1)
    return from_integer_map(model, Flavor(m.flavor.kind, 1))


def sd_e_crossed(m: CrossedMorphism) -> CrossedMorphism:
    """Δ_{2r}D -> Δ_rD on generators: f_{2r} -> f^e_r, τ -> τ, ω -> ω.

    This assignment respects composition only on the part generated by Δ
    and the subgroup <τ^{2(n+1)}, ω>; see the tests for the failing relations.
    """
    if m.flavor.r % 2:
        raise SubdivisionError("sd^e_r starts from an even r")
    r = m.flavor.r // 2
    phi = sd_e_map(m.phi)
    g = GroupElement(2 * m.source + 1, m.g.power, m.g.reflected, r)
    return CrossedMorphism(phi, g, Flavor(m.flavor.kind, r))


# --------------------------------------------------------------------------
# derived objects


class DerivedSet(SimplicialObject):
    """A lazy view of sd_r X or sd^e_r X.

    ``sd``: a Δ_r-object of the same kind as the base.  ``sde``: a simplicial
    set with a simplicial action of D_r (or C_r for cyclic bases) generated by
    τ^{2(n+1)} and ω.
    """

    def __init__(self, base: SimplicialObject, transform: str, r: int):
        if transform not in ("sd", "sde"):
            raise SubdivisionError(f"unknown transform {transform!r}")
        if r < 1:
            raise SubdivisionError("r must be positive")
        if base.r != 1:
            raise SubdivisionError("subdivide objects indexed by r = 1")
        if transform == "sde" and base.kind == "simplicial":
            raise FlavorError("sd^e_r needs a cyclic or dihedral base")
        self.base = base
        self.transform = transform
        if transform == "sd":
            self.kind = base.kind
            self.r = 1 if base.kind == "simplicial" else r
        else:
            self.kind, self.r = "simplicial", 1
        self.factor = r
        self.name = f"{transform}_{r}({getattr(base, 'name', base)})"

    def base_level(self, n: int) -> int:
        k = self.factor * (n + 1)
        return (k if self.transform == "sd" else 2 * k) - 1

    def elements(self, n: int) -> list:
        return self.base.elements(self.base_level(n))

    def dim(self, y) -> int:
        d = self.base.dim(y) + 1
        step = self.factor if self.transform == "sd" else 2 * self.factor
        if d % step:
            raise SubdivisionError("element is not in the image of the subdivision")
        return d // step - 1

    def operator(self, f: OrdinalMap) -> OrdinalMap:
        g = f if self.transform == "sd" else sd_e_map(f)
        return sd_r_map(g, self.factor)

    def apply_ord(self, y, f: OrdinalMap):
        return self.base.apply_ord(y, self.operator(f))

    def apply_group(self, y, g: GroupElement):
        if self.transform != "sd":
            raise FlavorError("use dr_act for the simplicial group action on sd^e")
        return self.base.apply(y, GroupElement(self.base_level(g.level), g.power, g.reflected, 1))

    def dr_act(self, y, k: int = 1, reflected: bool = False):
        """τ_{2r,n}^{2(n+1)k} ω^reflected acting on sd^e_r X[n]."""
        if self.transform != "sde":
            raise FlavorError("the D_r action lives on sd^e")
        n = self.dim(y)
        if reflected and self.base.kind != "dihedral":
            raise FlavorError("reflections need a dihedral base")
        g = GroupElement(self.base_level(n), 2 * (n + 1) * k, reflected, 1)
        return self.base.apply(y, g)

    def shift_act(self, y, p: int = 1, reflected: bool = False):
        """τ_{2r,n}^p ω^reflected as a grid map on X[2r(n+1) - 1]."""
        if self.transform != "sde":
            raise FlavorError("shift actions live on sd^e")
        g = GroupElement(self.base_level(self.dim(y)), p, reflected, 1)
        return self.base.apply(y, g)

    def __repr__(self) -> str:
        return f"DerivedSet({self.name})"


def subdivide(X: SimplicialObject, transform: str = "sd", r: int = 2) -> DerivedSet:
    return DerivedSet(X, transform, r)


# --------------------------------------------------------------------------
# points


def _interval_grid(F: CutSet, r: int) -> list[Fraction]:
    xs = [Fraction(0), *F.points, Fraction(1)]
    return [(a + x) / r for a in range(r) for x in xs]


def _sde_grid(F: CutSet, r: int) -> list[Fraction]:
    xs = [Fraction(0), *F.points, Fraction(1)]
    out = []
    for a in range(r):
        for x in xs:
            out += [(2 * a + x) / (2 * r), (2 * a + 2 - x) / (2 * r)]
    return out


def realize_point_map_Dr(p: RealizationPoint) -> RealizationPoint:
    """D_r (or D^e_r): a point of |sd_r X| or |sd^e_r X| to a point of |X|.

    Also accepts a point of the base object over a length-r shape, which is
    simply rescaled.
    """
    Y = p.X
    F = p.cuts
    if not isinstance(Y, DerivedSet):
        if F.length == 1:
            return p
        return RealizationPoint(Y, F.scaled(1 / F.length), p.elem)
    X, r = Y.base, Y.factor
    if Y.transform == "sd":
        if F.shape == "interval":
            if F.length != 1:
                raise SubdivisionError("derived interval points live on [0, 1]")
            return RealizationPoint(X, CutSet.interval(_interval_grid(F, r)), p.elem)
        return RealizationPoint(X, F.scaled(Fraction(1, r)), p.elem)
    if F.shape != "interval" or F.length != 1:
        raise SubdivisionError("sd^e points are taken over [0, 1]")
    return RealizationPoint(X, CutSet.circle(_sde_grid(F, r)), p.elem)


def to_long_shape(p: RealizationPoint) -> RealizationPoint:
    """The same element viewed on the base over [0, r], R/rZ or R/2rZ."""
    Y = p.X
    if not isinstance(Y, DerivedSet):
        raise SubdivisionError("needs a derived point")
    q = realize_point_map_Dr(p)
    k = Y.factor if Y.transform == "sd" else 2 * Y.factor
    return RealizationPoint(Y.base, q.cuts.scaled(Fraction(k)), q.elem)


def lift_point(q: RealizationPoint, Y: DerivedSet) -> RealizationPoint:
    """Inverse of D_r: refine ``q`` until its cuts have the derived shape."""
    if q.X != Y.base:
        raise SubdivisionError("point and subdivision have different bases")
    r = Y.factor
    F = q.cuts
    if Y.transform == "sd" and F.shape == "interval":
        base = {(c * r) % 1 for c in F.points} - {Fraction(0)}
        G = CutSet.interval(base)
        target = CutSet.interval(_interval_grid(G, r))
        pushed = push_forward(q, target)
        return RealizationPoint(Y, G, pushed.elem)
    if Y.transform == "sd":
        base = {(c * r) % 1 for c in F.points}
        G = CutSet.periodic(base, r)
        pushed = push_forward(q, G.scaled(Fraction(1, r)))
        return RealizationPoint(Y, G, pushed.elem)
    base = set()
    for c in F.points:
        t = (c * 2 * r) % 2
        x = t if t <= 1 else 2 - t
        if 0 < x < 1:
            base.add(x)
    G = CutSet.interval(base)
    pushed = push_forward(q, CutSet.circle(_sde_grid(G, r)))
    return RealizationPoint(Y, G, pushed.elem)


# --------------------------------------------------------------------------
# equivariance


@dataclass
class EquivarianceReport:
    checked: int = 0
    direct_checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def commutes_with_unit(a: PLHomeo, unit: Fraction) -> bool:
    """α(x + unit) = α(x) ± unit on the lift (+ for orientation preserving)."""
    xs = {x + k * unit for x, _ in a.breakpoints for k in (-1, 0, 1)}
    if a.shape == "interval":
        xs = {x for x in xs if 0 <= x <= a.length - unit}
    return all(a.lift(x + unit) == a.lift(x) + a.orientation * unit for x in xs)


def _restrict_to_unit(a: PLHomeo) -> PLHomeo:
    pts = [(x, y) for x, y in a.breakpoints if x <= 1]
    if pts[-1][0] != 1:
        pts.append((Fraction(1), a.lift(1)))
    return PLHomeo.interval(pts)


def act_derived(a: PLHomeo, p: RealizationPoint) -> RealizationPoint:
    """Act on a derived point through the derived object's own structure.

    Needs α to commute with translation by 1 (sd) or to lie in the D_r
    generated by x -> x + 2 and x -> -x (sd^e, on R/2rZ).
    """
    Y = p.X
    if Y.transform == "sd" and p.cuts.shape == "interval":
        if not commutes_with_unit(a, Fraction(1)):
            raise SubdivisionError("α does not commute with x -> x + 1")
        return act(_restrict_to_unit(a), p)
    if Y.transform == "sd":
        if not commutes_with_unit(a, Fraction(1)):
            raise SubdivisionError("α does not commute with x -> x + 1")
        return act(a, p)
    k, refl = dr_element(a, Y.factor)
    return RealizationPoint(Y, p.cuts, Y.dr_act(p.elem, k, refl))


def dr_element(a: PLHomeo, r: int) -> tuple[int, bool]:
    """Identify α in Homeo R/2rZ with (k, reflected) meaning τ^{2k} ω^e, or fail."""
    L = Fraction(2 * r)
    if a.shape != "circle" or a.length != L or len(a.breakpoints) != 1:
        raise SubdivisionError("not an element of D_r")
    c = a.breakpoints[0][1]
    if c % 2:
        raise SubdivisionError("not an element of D_r")
    return int(c // 2), a.orientation < 0


def equivariance_check(alphas: Sequence[PLHomeo], samples: Sequence[RealizationPoint]) -> EquivarianceReport:
    """D(ρ_α p) = ρ_{d(α)} D(p) for every α and derived sample point p."""
    rep = EquivarianceReport()
    for p in samples:
        Y = p.X
        k = Y.factor if Y.transform == "sd" else 2 * Y.factor
        Dp = realize_point_map_Dr(p)
        long_p = to_long_shape(p)
        for a in alphas:
            rhs = act(scale(a, Fraction(1, k)), Dp)
            lhs = realize_point_map_Dr(act(a, long_p))
            rep.checked += 1
            if not equal(lhs, rhs):
                rep.failures.append(f"{a} on {p}: {lhs} vs {rhs}")
                continue
            try:
                direct = act_derived(a, p)
            except SubdivisionError:
                continue
            rep.direct_checked += 1
            if not equal(realize_point_map_Dr(direct), rhs):
                rep.failures.append(f"{a} on {p} through the derived structure: {direct}")
    return rep


# --------------------------------------------------------------------------
# fixed points


class FixedObject(SimplicialObject):
    """Levelwise fixed elements of sd^e_r X under D_r or C_r.

    For C_r over a dihedral base the rotation τ_{2r,n}^2 and reflection
    ω_{2r,n} are offered as a candidate dihedral structure.
    """

    def __init__(self, Y: DerivedSet, group: str):
        if Y.transform != "sde":
            raise SubdivisionError("fixed points are taken on sd^e_r")
        if group not in ("D", "C"):
            raise SubdivisionError("group is D or C")
        if group == "D" and Y.base.kind != "dihedral":
            raise FlavorError("D_r acts only on dihedral bases")
        self.Y = Y
        self.group = group
        self.kind = "dihedral" if group == "C" and Y.base.kind == "dihedral" else "simplicial"
        self.r = 1
        self._cache: dict[int, list] = {}

    def is_fixed(self, y) -> bool:
        if self.Y.dr_act(y, 1) != y:
            return False
        return self.group == "C" or self.Y.dr_act(y, 0, True) == y

    def elements(self, n: int) -> list:
        if n not in self._cache:
            self._cache[n] = [y for y in self.Y.elements(n) if self.is_fixed(y)]
        return self._cache[n]

    def dim(self, y) -> int:
        return self.Y.dim(y)

    def apply_ord(self, y, f: OrdinalMap):
        return self.Y.apply_ord(y, f)

    def apply_group(self, y, g: GroupElement):
        return self.Y.shift_act(y, 2 * g.power, g.reflected)


def fixed_points(X: SimplicialObject, r: int, group: str = "D", dim: int = 3
                 ) -> tuple[Presentation, FixedObject]:
    """Materialize (sd^e_r X)^{D_r} or (sd^e_r X)^{C_r} up to ``dim``."""
    obj = FixedObject(DerivedSet(X, "sde", r), group)
    names: dict = {}

    def name(y) -> str:
        key = (obj.dim(y), len(names))
        tag = f"f{key[0]}_{key[1]}"
        names[y] = tag
        return tag

    pres, _ = materialize(obj, dim, complete=False, name_fn=name, name=f"sde_{r}^{group}")
    return pres, obj


@dataclass
class FixedPointReport:
    derived_points: int = 0
    fixed_derived: int = 0
    base_points: int = 0
    fixed_base: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def dr_generators(r: int) -> list[PLHomeo]:
    """x -> x + 2 and x -> -x on R/2rZ."""
    L = 2 * r
    return [PLHomeo.rotation(2, L), PLHomeo.reflection(0, L)]


def fixed_point_homeo_check(X: SimplicialObject, r: int, cut_grid: Iterable, max_cuts: int = 2
                            ) -> FixedPointReport:
    """Compare simplicially fixed points of sd^e_r X with D_r-fixed points of |X|.

    Derived side: every element over every cut set drawn from ``cut_grid``
    (at most ``max_cuts`` cuts).  A class is fixed simplicially when its
    element is fixed; it is fixed geometrically when its image in |X| is
    fixed by rotation through 1/r and the reflection x -> -x.
    """
    from itertools import combinations

    Y = DerivedSet(X, "sde", r)
    gens = [scale(g, Fraction(1, 2 * r)) for g in dr_generators(r)]
    fixed_obj = FixedObject(Y, "D")
    grid = sorted({as_q(c) for c in cut_grid if 0 < as_q(c) < 1})
    rep = FixedPointReport()
    seen_images = set()
    for k in range(max_cuts + 1):
        for cuts in combinations(grid, k):
            F = CutSet.interval(cuts)
            for y in Y.elements(F.level):
                p = RealizationPoint(Y, F, y)
                rep.derived_points += 1
                simp = fixed_obj.is_fixed(y)
                q = realize_point_map_Dr(p)
                geo = all(equal(act(g, q), q) for g in gens)
                rep.fixed_derived += simp
                if simp != geo:
                    rep.mismatches.append(f"{p}: simplicially fixed={simp}, geometrically fixed={geo}")
                if geo:
                    seen_images.add(normalize(q))
    # base side: symmetric cut sets on R/Z, all elements
    for k in range(max_cuts + 1):
        for cuts in combinations(grid, k):
            C = CutSet.circle(_sde_grid(CutSet.interval(cuts), r))
            for x in X.elements(C.level):
                q = RealizationPoint(X, C, x)
                rep.base_points += 1
                if not all(equal(act(g, q), q) for g in gens):
                    continue
                rep.fixed_base += 1
                p = lift_point(q, Y)
                if not fixed_obj.is_fixed(p.elem):
                    rep.mismatches.append(f"{q}: fixed in |X| but its lift is not fixed")
                elif normalize(q) not in seen_images and not any(equal(q, s) for s in seen_images):
                    rep.mismatches.append(f"{q}: fixed in |X| but not reached from the fixed-point set")
    return rep


def validate_fixed_structure(X: SimplicialObject, r: int, dim: int = 3):
    """Materialize (sd^e_r X)^{C_r} with τ^2, ω and run the dihedral validation."""
    pres, obj = fixed_points(X, r, "C", dim)
    return validate(pres, dim), pres
