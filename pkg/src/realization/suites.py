"""Verification suites shared by the command line and the acceptance tests.

Each suite returns a :class:`SuiteReport`.  Randomized suites take an explicit
seed, so a run is reproducible bit for bit.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .crossed import (
    Flavor,
    brute_force_functors,
    check_axioms,
    enumerate_aut,
    enumerate_hom,
    to_integer_map,
)
from .drinfeld import (
    CutSet,
    RealizationPoint,
    _removable,
    anchor,
    distance,
    equal,
    from_coords,
    normalize,
    push_forward,
    to_coords,
)
from .homeo import cover, periodic_interval, random_homeo
from .sset import (
    Presentation,
    SSetMap,
    check_relations,
    equalizer,
    product,
    standard,
    validate,
)
from .subdiv import (
    DerivedSet,
    equivariance_check,
    fixed_point_homeo_check,
    fixed_points,
    lift_point,
    realize_point_map_Dr,
)


@dataclass
class SuiteReport:
    name: str
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    facts: dict[str, object] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, key: str, k: int = 1) -> None:
        self.checks[key] = self.checks.get(key, 0) + k

    def fail(self, msg: str) -> None:
        if len(self.failures) < 50:
            self.failures.append(msg)


class _timed:
    def __init__(self, report: SuiteReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.seconds = time.perf_counter() - self.t0
        return False


# --------------------------------------------------------------------------
# crossed simplicial groups


def _group_shape(kind: str, n: int) -> tuple[bool, str]:
    """Is Aut[n] cyclic of order n+1 / dihedral of order 2(n+1)?"""
    fl = Flavor(kind)
    auts = enumerate_aut(n, fl)
    gs = [a.g for a in auts]
    m = n + 1
    want = m * (2 if kind == "D" else 1)
    if len(set(gs)) != want:
        return False, f"|Aut[{n}]| = {len(set(gs))}, want {want}"
    rot = [g for g in gs if not g.reflected]
    orders = {}
    for g in gs:
        k, h = 1, g
        while not h.is_identity:
            h, k = h * g, k + 1
        orders[g] = k
    if max(orders[g] for g in rot) != m:
        return False, f"no rotation of order {m} at level {n}"
    if kind == "D":
        if any(orders[g] != 2 for g in gs if g.reflected):
            return False, f"a reflection of order != 2 at level {n}"
        t = next(g for g in rot if orders[g] == m)
        w = next(g for g in gs if g.reflected)
        if w * t * w != t.inverse():
            return False, f"ω τ ω != τ^-1 at level {n}"
    return True, ""


def suite_axioms(kinds=("C", "D"), group_levels: int = 5, relation_level: int = 4, r_max: int = 3,
                 word_level: int = 3, word_len: int = 6) -> SuiteReport:
    rep = SuiteReport("axioms")
    with _timed(rep):
        for kind in kinds:
            for n in range(group_levels + 1):
                ok, why = _group_shape(kind, n)
                rep.count("group tables")
                if not ok:
                    rep.fail(f"{kind}: {why}")
            for r in range(1, r_max + 1):
                ar = check_axioms(Flavor(kind, r), relation_level, 0, factor_level=-1)
                rep.count("relation instances", sum(ar.checks.values()))
                rep.failures += [f"{kind}_{r}: {f}" for f in ar.failures[:5]]
            ar = check_axioms(Flavor(kind), word_level, word_len, factor_level=-1)
            rep.count("rewriting words", ar.checks.get("words", 0))
            rep.failures += [f"{kind} words: {f}" for f in ar.failures[:5]]
    return rep


def suite_factorization(kinds=("C", "D"), max_level: int = 2) -> SuiteReport:
    rep = SuiteReport("factorization")
    with _timed(rep):
        for kind in kinds:
            fl = Flavor(kind)
            for m in range(max_level + 1):
                for n in range(max_level + 1):
                    hom = enumerate_hom(m, n, fl)
                    models = [to_integer_map(x) for x in hom]
                    brute = brute_force_functors(m, n, fl)
                    rep.count("hom sets")
                    rep.facts[f"|Hom_{kind}([{m}],[{n}])|"] = len(hom)
                    if len(set(models)) != len(hom):
                        rep.fail(f"{kind} [{m}]->[{n}]: repeated morphisms")
                    if set(models) != brute:
                        rep.fail(f"{kind} [{m}]->[{n}]: {len(hom)} normal forms, {len(brute)} functors")
    return rep


# --------------------------------------------------------------------------
# the metric


def _rand_coords(rng: random.Random, n: int, den: int = 24) -> tuple[Fraction, ...]:
    return tuple(sorted(Fraction(rng.randint(0, den), den) for _ in range(n)))


def disagreement_measure(x, y) -> Fraction:
    """Length of {t : #{x_i < t} != #{y_i < t}}, integrated directly."""
    pts = sorted({Fraction(0), Fraction(1), *x, *y})
    total = Fraction(0)
    for a, b in zip(pts, pts[1:]):
        t = (a + b) / 2
        if sum(1 for v in x if v < t) != sum(1 for v in y if v < t):
            total += b - a
    return total


def suite_metric(max_n: int = 3, pairs: int = 200, triples: int = 100, seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("metric")
    with _timed(rep):
        for k in range(pairs):
            n = 1 + k % max_n
            x, y = _rand_coords(rng, n), _rand_coords(rng, n)
            p, q = from_coords("simplex", n, x), from_coords("simplex", n, y)
            d = distance(p, q)
            rep.count("pairs")
            if d != disagreement_measure(x, y):
                rep.fail(f"Δ[{n}] {x} {y}: search {d}, oracle {disagreement_measure(x, y)}")
            if d > n * max(abs(a - b) for a, b in zip(x, y)):
                rep.fail(f"Δ[{n}] {x} {y}: {d} exceeds n·max|x_i - y_i|")
        for k in range(triples):
            n = 1 + k % max_n
            pts = [from_coords("simplex", n, _rand_coords(rng, n, 6)) for _ in range(3)]
            a, b, c = pts
            dab, dbc, dac = distance(a, b), distance(b, c), distance(a, c)
            rep.count("triples")
            if dab != distance(b, a):
                rep.fail(f"asymmetric at {a}, {b}")
            if (dab == 0) != equal(a, b):
                rep.fail(f"d = {dab} but equal = {equal(a, b)} at {a}, {b}")
            if dac > dab + dbc:
                rep.fail(f"triangle inequality fails at {a}, {b}, {c}")
            if distance(a, a) != 0:
                rep.fail(f"d(p, p) != 0 at {a}")
    return rep


def random_point(X, rng: random.Random, max_cuts: int = 3, den: int = 12, shape: str | None = None):
    shape = shape or ("interval" if X.kind == "simplicial" else "circle")
    grid = [Fraction(i, den) for i in range(1, den)] if shape == "interval" else \
        [Fraction(i, den) for i in range(den)]
    lo = 0 if shape == "interval" else 1
    F = CutSet(shape, tuple(sorted(rng.sample(grid, rng.randint(lo, max_cuts)))))
    return RealizationPoint(X, F, rng.choice(X.elements(F.level)))


def suite_refinement(presentations, instances: int = 100, seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("refinement")
    with _timed(rep):
        for k in range(instances):
            X = presentations[k % len(presentations)]
            p, q = random_point(X, rng, 2), random_point(X, rng, 2)
            d0 = distance(p, q)
            extra = {Fraction(rng.randint(1, 23), 24) for _ in range(rng.randint(1, 3))}
            G = p.cuts.union(q.cuts).union(CutSet(p.cuts.shape, tuple(sorted(extra))))
            d1 = distance(push_forward(p, G), push_forward(q, G))
            rep.count("instances")
            if d0 != d1:
                rep.fail(f"{X.name}: {p}, {q} -> {d0} before, {d1} after refining to {G.points}")
    return rep


# --------------------------------------------------------------------------
# products and equalizers


def suite_products(grid: int = 9) -> SuiteReport:
    from .literals import _standard_ez

    rep = SuiteReport("products")
    with _timed(rep):
        D1 = standard("simplex", 1)
        P = product(D1, D1)
        nd = {d: sum(1 for e in P.generators.values() if e == d) for d in range(3)}
        rep.facts["nondegenerate cells"] = nd
        rep.count("shuffle counts")
        if nd.get(2) != 2 or nd.get(1) != 5 or nd.get(0) != 4:
            rep.fail(f"Δ[1]xΔ[1] has cells {nd}, want 4, 5, 2")
        ez = _standard_ez("simplicial", 1)
        back = {v: k for k, v in ez.items()}
        xs = [Fraction(i, grid + 1) for i in range(1, grid + 1)]
        seen = {}
        for x in xs:
            for y in xs:
                G = CutSet.interval({x, y})
                a = push_forward(RealizationPoint(D1, CutSet.interval([x]), _elem_at(D1, x)), G)
                b = push_forward(RealizationPoint(D1, CutSet.interval([y]), _elem_at(D1, y)), G)
                p = normalize(RealizationPoint(P, G, P.element_of(a.elem, b.elem)))
                rep.count("grid points")
                if p in seen:
                    rep.fail(f"({x}, {y}) and {seen[p]} realize to the same point")
                seen[p] = (x, y)
                u, v = P.pair_of(p.elem)
                cx = to_coords(RealizationPoint(ez_owner(), p.cuts, back[u]))
                cy = to_coords(RealizationPoint(ez_owner(), p.cuts, back[v]))
                if (cx, cy) != ((x,), (y,)):
                    rep.fail(f"({x}, {y}) projects to {cx}, {cy}")
        # the diagonal as the equalizer of the two projections
        f = SSetMap(P, D1, {g: P.pairs[g][0] for g in P.generators})
        g = SSetMap(P, D1, {g: P.pairs[g][1] for g in P.generators})
        E = equalizer(f, g)
        inside = {xy for p, xy in seen.items() if p.elem.generator in E.generators}
        agree = {xy for p, xy in seen.items()
                 if equal(RealizationPoint(D1, p.cuts, f(p.elem)), RealizationPoint(D1, p.cuts, g(p.elem)))}
        diag = {(x, x) for x in xs}
        rep.count("equalizer points", len(seen))
        if inside != diag or agree != diag:
            rep.fail(f"equalizer realizes as {sorted(inside)}, maps agree on {sorted(agree)}")
    return rep


def ez_owner():
    from .sset import Representable

    return Representable("simplicial", 1)


def _elem_at(D1: Presentation, x: Fraction):
    from .literals import _standard_ez

    p = from_coords("simplex", 1, (x,))
    return _standard_ez("simplicial", 1)[p.elem]


# --------------------------------------------------------------------------
# subdivision


def derived_sample(Y: DerivedSet, rng: random.Random, max_cuts: int = 2, den: int = 12):
    if Y.transform == "sd" and Y.base.kind != "simplicial":
        pts = rng.sample([Fraction(i, den) for i in range(den)], rng.randint(1, max_cuts))
        F = CutSet.periodic(pts, Y.r)
    else:
        F = CutSet.interval(rng.sample([Fraction(i, den) for i in range(1, den)], rng.randint(0, max_cuts)))
    return RealizationPoint(Y, F, rng.choice(Y.elements(F.level)))


def sample_homeos(kind: str, r: int, rng: random.Random, count: int = 10):
    """Half periodic (covers), half general; one reversing map for dihedral objects."""
    out = []
    for i in range(count):
        if kind == "simplicial":
            a = random_homeo(rng, "interval", r) if i % 2 else periodic_interval(random_homeo(rng, "interval"), r)
        else:
            o = -1 if kind == "dihedral" and i % 3 == 0 else 1
            a = random_homeo(rng, "circle", r, o) if i % 2 else cover(random_homeo(rng, "circle", 1, o), r)
        out.append(a)
    return out


def suite_sdr(objects, rs=(2, 3), samples: int = 100, homeos: int = 10, square_points: int = 20,
              seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("sdr")
    with _timed(rep):
        for X in objects:
            for r in rs:
                Y = DerivedSet(X, "sd", r)
                pts = {normalize(derived_sample(Y, rng)) for _ in range(samples)}
                while len(pts) < samples:
                    pts.add(normalize(derived_sample(Y, rng, 3, 24)))
                pts = sorted(pts, key=repr)
                images = {}
                for p in pts:
                    q = normalize(realize_point_map_Dr(p))
                    rep.count("round trips")
                    if normalize(lift_point(q, Y)) != p:
                        rep.fail(f"{X.name} r={r}: {p} does not round-trip")
                    if q in images:
                        rep.fail(f"{X.name} r={r}: {p} and {images[q]} have the same image")
                    images[q] = p
                for _ in range(samples // 4):
                    q = normalize(random_point(X, rng, 3))
                    rep.count("preimages")
                    if not equal(realize_point_map_Dr(lift_point(q, Y)), q):
                        rep.fail(f"{X.name} r={r}: {q} has no preimage")
                alphas = sample_homeos(X.kind, r, rng, homeos)
                eq = equivariance_check(alphas, pts[:square_points])
                rep.count("squares", eq.checked)
                rep.count("squares through the derived structure", eq.direct_checked)
                rep.failures += [f"{X.name} r={r}: {f}" for f in eq.failures[:5]]
    return rep


def suite_fixed_points(X: Presentation, r: int = 2, dim: int = 3, grid_den: int = 6, max_cuts: int = 2
                       ) -> SuiteReport:
    rep = SuiteReport("fixed-points")
    with _timed(rep):
        sizes = {}
        for group in ("D", "C"):
            pres, obj = fixed_points(X, r, group, dim)
            sizes[group] = [len(obj.elements(n)) for n in range(dim + 1)]
            rep.count(f"{group}_{r} levels", dim + 1)
            if group == "C":
                v = validate(pres, dim)
                lazy = check_relations(obj, dim)
                rep.count("dihedral relations", v.checked + lazy.checked)
                if not lazy.ok:
                    rep.fail(f"C_{r} fixed points are not dihedral: {lazy.violations[0]}")
                if not v.ok:
                    rep.fail(f"C_{r} fixed-point presentation is not dihedral: {v.first}")
        rep.facts["fixed sizes"] = sizes
        hc = fixed_point_homeo_check(X, r, [Fraction(k, grid_den) for k in range(1, grid_den)], max_cuts)
        rep.count("derived points", hc.derived_points)
        rep.count("base points", hc.base_points)
        rep.facts["fixed derived"] = hc.fixed_derived
        rep.facts["fixed base"] = hc.fixed_base
        rep.failures += hc.mismatches[:10]
    return rep


# --------------------------------------------------------------------------
# Eilenberg-Zilber and normalization


def suite_ez(presentations, dim: int = 3) -> SuiteReport:
    from .delta import degeneracy_word_map, surjections

    rep = SuiteReport("ez")
    with _timed(rep):
        for X in presentations:
            top = dim if X.cap is None else min(dim, X.cap)
            for n in range(top + 1):
                elems = X.elements(n)
                for i in range(n + 1):
                    imgs = [X.degen(x, i) for x in elems]
                    rep.count("degeneracies")
                    if len(set(imgs)) != len(imgs):
                        rep.fail(f"{X.name}: s{i} is not injective on level {n}")
                reached = {}
                for g, d in X.generators.items():
                    if d > n:
                        continue
                    for sigma in surjections(n, d):
                        e = X.apply_ord(X.generator(g), sigma)
                        rep.count("EZ pairs")
                        if e in reached:
                            rep.fail(f"{X.name}: {e} has two EZ forms")
                        reached[e] = (g, sigma)
                if set(reached) != set(elems):
                    rep.fail(f"{X.name}: level {n} is not covered by EZ forms")
    return rep


def normalize_in_order(p: RealizationPoint, rng: random.Random) -> RealizationPoint:
    """Remove removable cuts in a random order until none is left."""
    while True:
        cuts = list(p.cuts.orbit_representatives())
        rng.shuffle(cuts)
        for c in cuts:
            q = _removable(p, c)
            if q is not None:
                p = q
                break
        else:
            return anchor(p)


def suite_normalize(presentations, cases: int = 500, seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("normalize")
    with _timed(rep):
        for k in range(cases):
            X = presentations[k % len(presentations)]
            p = random_point(X, rng, 2)
            extra = {Fraction(rng.randint(1, 11), 12) for _ in range(rng.randint(0, 3))}
            if extra:
                p = push_forward(p, p.cuts.union(CutSet(p.cuts.shape, tuple(sorted(extra)))))
            a = normalize(p)
            rep.count("cases")
            if normalize(a) != a:
                rep.fail(f"{X.name}: normalize is not idempotent on {p}")
            if normalize_in_order(p, rng) != a:
                rep.fail(f"{X.name}: normal form depends on removal order for {p}")
    return rep
