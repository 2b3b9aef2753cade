"""Finitely presented simplicial, cyclic and dihedral sets.

An element of a presentation is a generator together with an increasing
degeneracy word ``(j_1 < ... < j_l)``; it stands for

    X[s^{j_1} o ... o s^{j_l}](gen) = s_{j_l} ... s_{j_1} gen,

which is the Eilenberg-Zilber normal form.  Face data lives on generators only;
rotations and reflections are tabulated on generators and extended to
degenerate elements through the crossed relations.

Besides :class:`Presentation` the module provides :class:`Representable`, the
hom-functor Hom(-, [n]) evaluated by composing morphisms.  It needs no tables,
so it serves as the oracle for the tabulated standard objects.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct
from typing import Callable, Hashable, Iterable, Sequence

from .crossed import (
    CrossedMorphism,
    Flavor,
    GroupElement,
    Letter,
    compose_models,
    embed,
    enumerate_hom,
    from_integer_map,
    group_identity,
    omega,
    relation_instances,
    tau,
    to_integer_map,
)
from .delta import (
    OrdinalMap,
    all_maps,
    compose_ord,
    degeneracy,
    degeneracy_word_map,
    epi_mono_factor,
    epi_part,
    face,
    identity,
    mono_part,
    surjections,
)

KINDS = ("simplicial", "cyclic", "dihedral")
_GROUP_KIND = {"cyclic": "C", "dihedral": "D"}
NAME_RE = re.compile(r"^[^\s#=:,]+$")
DEGEN_RE = re.compile(r"^s\d+$")


class PresentationError(ValueError):
    """Malformed presentation data."""


class CappedObjectError(ValueError):
    """A dimension beyond the tabulated range was requested."""


class CrossedActionError(ValueError):
    """The group tables do not extend to a well-defined action."""


class FlavorError(ValueError):
    """An operator is not available for the object's flavor."""


@dataclass(frozen=True, order=True)
class Element:
    generator: str
    word: tuple[int, ...]
    dim: int

    def __str__(self) -> str:
        return " ".join([f"s{j}" for j in reversed(self.word)] + [self.generator])

    @property
    def degenerate(self) -> bool:
        return bool(self.word)


def flavor_of(kind: str, r: int = 1) -> Flavor | None:
    if kind not in KINDS:
        raise PresentationError(f"unknown flavor {kind!r}")
    return Flavor(_GROUP_KIND[kind], r) if kind in _GROUP_KIND else None


class SimplicialObject:
    """Common interface: level sets plus a contravariant action of the index category."""

    kind: str = "simplicial"
    r: int = 1

    @property
    def flavor(self) -> Flavor | None:
        return flavor_of(self.kind, self.r)

    def elements(self, n: int) -> list:
        raise NotImplementedError

    def dim(self, x) -> int:
        raise NotImplementedError

    def apply_ord(self, x, phi: OrdinalMap):
        raise NotImplementedError

    def apply_group(self, x, g: GroupElement):
        raise NotImplementedError

    def apply(self, x, m):
        """X[m](x) for an order map, group element or crossed morphism."""
        if isinstance(m, OrdinalMap):
            if m.target != self.dim(x):
                raise ValueError(f"operator into [{m.target}] applied to a {self.dim(x)}-element")
            return self.apply_ord(x, m)
        if isinstance(m, GroupElement):
            self._check_group(m, self.dim(x))
            return x if m.is_identity else self.apply_group(x, m)
        if isinstance(m, CrossedMorphism):
            y = self.apply(x, m.phi)
            return self.apply(y, m.g)
        raise TypeError(f"cannot apply {type(m).__name__}")

    def _check_group(self, g: GroupElement, level: int) -> None:
        if g.level != level:
            raise ValueError(f"group element at level {g.level} applied to a {level}-element")
        if self.kind == "simplicial" and not g.is_identity:
            raise FlavorError("simplicial objects carry no rotations")
        if g.reflected and self.kind != "dihedral":
            raise FlavorError("reflections need a dihedral object")
        if g.r != self.r:
            raise FlavorError(f"object is indexed by r={self.r}, operator by r={g.r}")

    def face(self, x, i: int):
        return self.apply_ord(x, face(i, self.dim(x)))

    def degen(self, x, i: int):
        return self.apply_ord(x, degeneracy(i, self.dim(x)))

    def tau(self, x, power: int = 1):
        return self.apply(x, tau(self.dim(x), self.r, power))

    def omega(self, x):
        return self.apply(x, omega(self.dim(x), self.r))

    def apply_letters(self, x, word: Sequence[Letter]):
        """Apply a generator word, leftmost letter first (contravariance)."""
        for letter in word:
            if letter.kind == "d":
                x = self.face(x, letter.index)
            elif letter.kind == "s":
                x = self.degen(x, letter.index)
            elif letter.kind == "t":
                x = self.apply(x, tau(letter.target, self.r))
            elif letter.kind == "w":
                x = self.apply(x, omega(letter.target, self.r))
            else:
                x = self.apply(x, letter.group)
        return x

    def is_degenerate(self, x) -> bool:
        n = self.dim(x)
        return any(self.degen(self.face(x, j), j) == x for j in range(n))

    def nondegenerate(self, n: int) -> list:
        return [x for x in self.elements(n) if not self.is_degenerate(x)]


# --------------------------------------------------------------------------
# presentations


def _surjection_words(n: int, k: int) -> list[tuple[int, ...]]:
    return [tuple(epi_mono_factor(s)[1]) for s in surjections(n, k)]


class Presentation(SimplicialObject):
    def __init__(
        self,
        kind: str,
        generators: Iterable[tuple[str, int]],
        faces: dict[str, Sequence[Element]],
        t: dict[str, Element] | None = None,
        w: dict[str, Element] | None = None,
        cap: int | None = None,
        name: str = "X",
    ):
        flavor_of(kind)
        self.kind = kind
        self.r = 1
        self.name = name
        self.cap = cap
        self.generators: dict[str, int] = {}
        for gname, d in generators:
            if not NAME_RE.match(gname) or DEGEN_RE.match(gname):
                raise PresentationError(f"bad generator name {gname!r}")
            if gname in self.generators:
                raise PresentationError(f"duplicate generator {gname!r}")
            if d < 0:
                raise PresentationError(f"negative dimension for {gname!r}")
            self.generators[gname] = d
        self.faces = {g: tuple(faces.get(g, ())) for g in self.generators}
        self.t = dict(t or {})
        self.w = dict(w or {})
        self._check_shape()
        self._ord_cache: dict = {}
        self._mono_cache: dict = {}
        self._tau_levels: dict[int, dict[Element, Element]] = {}

    # structure ------------------------------------------------------------

    def _check_element(self, e: Element, dim: int, what: str) -> None:
        if e.generator not in self.generators:
            raise PresentationError(f"{what}: unknown generator {e.generator!r}")
        gd = self.generators[e.generator]
        if e.dim != dim or gd + len(e.word) != dim:
            raise PresentationError(f"{what}: {e} has the wrong dimension (want {dim})")
        for k, j in enumerate(e.word):
            if not 0 <= j <= gd + k or (k and j <= e.word[k - 1]):
                raise PresentationError(f"{what}: invalid degeneracy word in {e}")

    def _check_shape(self) -> None:
        for g, d in self.generators.items():
            fs = self.faces[g]
            if d == 0 and fs:
                raise PresentationError(f"vertex {g!r} has faces")
            if d > 0 and len(fs) != d + 1:
                raise PresentationError(f"{g!r} needs {d + 1} faces, has {len(fs)}")
            for i, e in enumerate(fs):
                self._check_element(e, d - 1, f"face {g} {i}")
        need = {"simplicial": (), "cyclic": ("t",), "dihedral": ("t", "w")}[self.kind]
        for label in ("t", "w"):
            table = getattr(self, label)
            if label not in need and table:
                raise PresentationError(f"{self.kind} presentation cannot carry {label}: actions")
            if label in need:
                for g, d in self.generators.items():
                    if g not in table:
                        raise PresentationError(f"missing {label} action for {g!r}")
                    self._check_element(table[g], d, f"{label} {g}")
                extra = set(table) - set(self.generators)
                if extra:
                    raise PresentationError(f"{label} action on unknown generators {sorted(extra)}")

    @property
    def max_dim(self) -> int:
        return max(self.generators.values(), default=-1)

    def _check_cap(self, n: int) -> None:
        if self.cap is not None and n > self.cap:
            raise CappedObjectError(f"{self.name} is tabulated only up to dimension {self.cap}")

    def generator(self, gname: str) -> Element:
        return Element(gname, (), self.generators[gname])

    def element(self, gname: str, word: Sequence[int] = ()) -> Element:
        word = tuple(word)
        e = Element(gname, word, self.generators[gname] + len(word))
        self._check_element(e, e.dim, "element")
        return e

    def elements(self, n: int) -> list[Element]:
        self._check_cap(n)
        out = []
        for g, d in self.generators.items():
            if d <= n:
                out.extend(Element(g, w, n) for w in _surjection_words(n, d))
        return out

    def dim(self, x: Element) -> int:
        return x.dim

    def is_degenerate(self, x: Element) -> bool:
        return x.degenerate

    def nondegenerate(self, n: int) -> list[Element]:
        self._check_cap(n)
        return [self.generator(g) for g, d in self.generators.items() if d == n]

    # simplicial action ----------------------------------------------------

    def apply_ord(self, x: Element, phi: OrdinalMap) -> Element:
        if phi.target != x.dim:
            raise ValueError("dimension mismatch")
        self._check_cap(phi.source)
        key = (x, phi.values)
        hit = self._ord_cache.get(key)
        if hit is not None:
            return hit
        gd = self.generators[x.generator]
        comp = compose_ord(degeneracy_word_map(x.word, gd), phi)
        y = self._apply_mono(x.generator, mono_part(comp))
        sigma = compose_ord(degeneracy_word_map(y.word, self.generators[y.generator]), epi_part(comp))
        out = Element(y.generator, tuple(epi_mono_factor(sigma)[1]), phi.source)
        self._ord_cache[key] = out
        return out

    def _apply_mono(self, gname: str, mono: OrdinalMap) -> Element:
        if mono.is_identity:
            return self.generator(gname)
        key = (gname, mono.values)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        i = epi_mono_factor(mono)[0][0]
        rest = OrdinalMap(mono.source, mono.target - 1, tuple(v if v < i else v - 1 for v in mono.values))
        out = self.apply_ord(self.faces[gname][i], rest)
        self._mono_cache[key] = out
        return out

    # group action ---------------------------------------------------------

    def apply_group(self, x: Element, g: GroupElement) -> Element:
        for _ in range(g.power):
            x = self._tau1(x)
        if g.reflected:
            x = self._omega1(x)
        return x

    def _omega1(self, x: Element) -> Element:
        if not x.word:
            return self.w[x.generator]
        j = x.word[-1]
        inner = Element(x.generator, x.word[:-1], x.dim - 1)
        return self.degen(self._omega1(inner), x.dim - 1 - j)

    def _tau1(self, x: Element) -> Element:
        if not x.word:
            return self.t[x.generator]
        j = x.word[-1]
        if j >= 1:
            inner = Element(x.generator, x.word[:-1], x.dim - 1)
            return self.degen(self._tau1(inner), j - 1)
        return self._tau_level(x.dim)[x]

    def _tau_level(self, n: int) -> dict[Element, Element]:
        """Rotation on the s_0-type elements of level n.

        The relations only give tau^2(s_0 z) = s_{n-1}(tau z); the value of
        tau(s_0 z) itself is pinned down by bijectivity of tau on X[n] and
        tau^{n+1} = 1.  We search for the unique assignment satisfying both.
        """
        if n in self._tau_levels:
            return self._tau_levels[n]
        elems = self.elements(n)
        unknown = [x for x in elems if x.word == (0,)]
        known = {x: self._tau1(x) for x in elems if x.word != (0,)}
        images = set(known.values())
        if len(images) != len(known):
            raise CrossedActionError(f"rotation is not injective on level {n}")
        free = [e for e in elems if e not in images]
        if len(free) != len(unknown):
            raise CrossedActionError(f"rotation cannot be a bijection on level {n}")
        targets = {u: self.degen(self._tau1(Element(u.generator, (), n - 1)), n - 1) for u in unknown}
        solutions: list[dict[Element, Element]] = []
        assign: dict[Element, Element] = {}
        used: set[Element] = set()

        def image(e: Element) -> Element | None:
            return known[e] if e in known else assign.get(e)

        def consistent(u: Element, c: Element) -> bool:
            tc = image(c)
            if tc is not None and tc != targets[u]:
                return False
            for u2, c2 in assign.items():
                if c2 == u and c != targets[u2]:
                    return False
            return True

        def search(k: int) -> None:
            if len(solutions) > 1:
                return
            if k == len(unknown):
                full = dict(known)
                full.update(assign)
                if all(_orbit_closes(full, e, n + 1) for e in elems):
                    solutions.append(dict(assign))
                return
            u = unknown[k]
            for c in free:
                if c in used:
                    continue
                assign[u] = c
                if consistent(u, c):
                    used.add(c)
                    search(k + 1)
                    used.discard(c)
                del assign[u]

        search(0)
        if not solutions:
            raise CrossedActionError(f"no rotation on level {n} satisfies the relations")
        if len(solutions) > 1:
            raise CrossedActionError(f"rotation on level {n} is not determined by the tables")
        self._tau_levels[n] = solutions[0]
        return solutions[0]

    # validation -----------------------------------------------------------

    def validate(self, max_level: int | None = None) -> "ValidationReport":
        return validate(self, max_level)

    def __repr__(self) -> str:
        counts = {}
        for d in self.generators.values():
            counts[d] = counts.get(d, 0) + 1
        return f"Presentation({self.name}, {self.kind}, gens by dim {dict(sorted(counts.items()))})"


def _orbit_closes(table: dict, e, order: int) -> bool:
    x = e
    for _ in range(order):
        x = table[x]
    return x == e


@dataclass
class Violation:
    relation: str
    generator: str
    detail: str

    def __str__(self) -> str:
        return f"{self.relation} fails at {self.generator}: {self.detail}"


@dataclass
class ValidationReport:
    name: str
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None


def validate(X: Presentation, max_level: int | None = None) -> ValidationReport:
    """Simplicial identities on generators, then every crossed relation on every element."""
    report = ValidationReport(X.name)
    for g, d in X.generators.items():
        x = X.generator(g)
        for i in range(d + 1):
            for j in range(i):
                if d < 2:
                    continue
                report.checked += 1
                lhs = X.face(X.face(x, i), j)
                rhs = X.face(X.face(x, j), i - 1)
                if lhs != rhs:
                    report.violations.append(Violation(
                        "S-1", g, f"d{j} d{i} = {lhs} but d{i - 1} d{j} = {rhs}"))
    if X.kind == "simplicial" or report.violations:
        return report
    top = max_level
    if top is None:
        top = X.cap if X.cap is not None else X.max_dim + 1
    if X.cap is not None:
        top = min(top, X.cap)
    return check_relations(X, top, report)


def check_relations(X: SimplicialObject, top: int, report: ValidationReport | None = None
                    ) -> ValidationReport:
    """Every crossed relation instance on every element of ``X`` up to level ``top``.

    Works on any object, so lazily defined structures can be checked without
    first being tabulated.
    """
    if report is None:
        report = ValidationReport(getattr(X, "name", repr(X)))
    flavor = X.flavor
    for n in range(top + 1):
        rels = [(nm, l, r) for nm, l, r in relation_instances(n, flavor)
                if max(x.source for x in l + r) <= top]
        try:
            for x in X.elements(n):
                for name, lhs, rhs in rels:
                    report.checked += 1
                    a = X.apply_letters(x, lhs)
                    b = X.apply_letters(x, rhs)
                    if a != b:
                        report.violations.append(Violation(
                            name, getattr(x, "generator", "-"),
                            f"on {x}: {lhs} gives {a}, {rhs} gives {b}"))
                        return report
        except CrossedActionError as exc:
            report.violations.append(Violation("SD-4", "-", str(exc)))
            return report
    return report


# --------------------------------------------------------------------------
# representables


class Representable(SimplicialObject):
    """Hom(-, [n]) in Δ, ΔC or ΔD.  Elements are morphisms; no dimension cap."""

    def __init__(self, kind: str, n: int):
        flavor_of(kind)
        self.kind = kind
        self.r = 1
        self.n = n
        self._cache: dict[int, list] = {}

    def elements(self, k: int) -> list:
        if k not in self._cache:
            if self.kind == "simplicial":
                self._cache[k] = list(all_maps(k, self.n))
            else:
                self._cache[k] = enumerate_hom(k, self.n, self.flavor)
        return self._cache[k]

    def dim(self, x) -> int:
        return x.source

    def apply_ord(self, x, phi: OrdinalMap):
        if isinstance(x, OrdinalMap):
            return compose_ord(x, phi)
        return self._compose(x, embed(phi, self.flavor))

    def apply_group(self, x, g: GroupElement):
        return self._compose(x, CrossedMorphism(identity(g.level), g, self.flavor))

    def _compose(self, a: CrossedMorphism, b: CrossedMorphism) -> CrossedMorphism:
        return from_integer_map(compose_models(to_integer_map(a), to_integer_map(b)), self.flavor)

    def is_degenerate(self, x) -> bool:
        if isinstance(x, OrdinalMap):
            return not x.is_injective
        return super().is_degenerate(x)

    def __eq__(self, other) -> bool:
        return isinstance(other, Representable) and (self.kind, self.n) == (other.kind, other.n)

    def __hash__(self) -> int:
        return hash((self.kind, self.n))

    def __repr__(self) -> str:
        return f"Representable({self.kind}, {self.n})"


def morphism_name(x) -> str:
    if isinstance(x, OrdinalMap):
        return "v" + "_".join(map(str, x.values))
    tag = f"t{x.g.power}" + ("w" if x.g.reflected else "")
    return "e" + "_".join(map(str, x.phi.values)) + "_" + tag


def materialize(obj: SimplicialObject, cap: int, complete: bool = False,
                name_fn: Callable[[Hashable], str] = str, name: str = "X"
                ) -> tuple[Presentation, dict]:
    """Tabulate ``obj`` up to dimension ``cap``.

    Returns the presentation and the dictionary sending each object element
    to its Element.  With ``complete`` the caller asserts there are no
    non-degenerate elements above ``cap`` and the result carries no cap.
    """
    ez: dict = {}
    gens: list[tuple[str, int]] = []
    faces: dict[str, list[Element]] = {}
    t: dict[str, Element] = {}
    w: dict[str, Element] = {}
    sources: dict[str, Hashable] = {}
    for n in range(cap + 1):
        for x in obj.elements(n):
            split = None
            for j in range(n):
                y = obj.face(x, j)
                if obj.degen(y, j) == x:
                    split = (j, y)
                    break
            if split is None:
                gname = name_fn(x)
                if gname in sources:
                    raise PresentationError(f"generator name clash on {gname!r}")
                sources[gname] = x
                gens.append((gname, n))
                ez[x] = Element(gname, (), n)
                faces[gname] = [ez[obj.face(x, i)] for i in range(n + 1)] if n else []
            else:
                j, y = split
                inner = ez[y]
                sigma = compose_ord(degeneracy_word_map(inner.word, inner.dim - len(inner.word)),
                                    degeneracy(j, n - 1))
                ez[x] = Element(inner.generator, tuple(epi_mono_factor(sigma)[1]), n)
    if obj.kind != "simplicial":
        for gname, d in gens:
            t[gname] = ez[obj.tau(sources[gname])]
            if obj.kind == "dihedral":
                w[gname] = ez[obj.omega(sources[gname])]
    pres = Presentation(obj.kind, gens, faces, t, w, cap=None if complete else cap, name=name)
    return pres, ez


def standard(kind: str, n: int, cap: int | None = None) -> Presentation:
    """Δ[n], Λ[n] or the standard dihedral n-object as a presentation.

    ``kind`` is ``simplex``, ``cyclic`` or ``dihedral``.  All three have no
    non-degenerate cells above dimension n + 1 (n for the simplex), so the
    table is complete.  A ``cap`` below that truncates it.
    """
    label = {"simplex": "simplicial", "cyclic": "cyclic", "dihedral": "dihedral"}.get(kind, kind)
    rep = Representable(label, n)
    top = n if label == "simplicial" else n + 1
    tag = {"simplicial": "Delta", "cyclic": "Lambda", "dihedral": "Dih"}[label]
    complete = cap is None or cap >= top
    pres, _ = materialize(rep, top if complete else cap, complete=complete,
                          name_fn=morphism_name, name=f"{tag}[{n}]")
    return pres


# --------------------------------------------------------------------------
# maps, products, equalizers


class MapError(ValueError):
    pass


class SSetMap:
    """A simplicial map given by its values on generators."""

    def __init__(self, source: Presentation, target: Presentation, images: dict[str, Element]):
        self.source = source
        self.target = target
        self.images = dict(images)
        for g, d in source.generators.items():
            if g not in self.images:
                raise MapError(f"no image for generator {g!r}")
            if self.images[g].dim != d:
                raise MapError(f"image of {g!r} has dimension {self.images[g].dim}, expected {d}")
        for g, d in source.generators.items():
            for i in range(d + 1 if d else 0):
                lhs = self(source.faces[g][i])
                rhs = target.face(self.images[g], i)
                if lhs != rhs:
                    raise MapError(f"map does not commute with d{i} on {g!r}: {lhs} vs {rhs}")

    def __call__(self, x: Element) -> Element:
        img = self.images[x.generator]
        sigma = degeneracy_word_map(x.word, x.dim - len(x.word))
        return self.target.apply_ord(img, sigma)


def constant_map(source: Presentation, target: Presentation, vertex: Element) -> SSetMap:
    if vertex.dim != 0:
        raise MapError("constant maps need a vertex")
    images = {}
    for g, d in source.generators.items():
        images[g] = target.apply_ord(vertex, OrdinalMap(d, 0, (0,) * (d + 1)))
    return SSetMap(source, target, images)


class ProductPresentation(Presentation):
    """X x Y with generator bookkeeping back to pairs."""

    pairs: dict[str, tuple[Element, Element]]

    def pair_of(self, e: Element) -> tuple[Element, Element]:
        a, b = self.pairs[e.generator]
        sigma = degeneracy_word_map(e.word, e.dim - len(e.word))
        return self.left.apply_ord(a, sigma), self.right.apply_ord(b, sigma)

    def element_of(self, a: Element, b: Element) -> Element:
        return self._ez[(a, b)]


class _PairObject(SimplicialObject):
    def __init__(self, X: Presentation, Y: Presentation):
        self.X, self.Y = X, Y
        self.kind = "simplicial"

    def elements(self, n: int) -> list:
        return list(iproduct(self.X.elements(n), self.Y.elements(n)))

    def dim(self, x) -> int:
        return x[0].dim

    def apply_ord(self, x, phi: OrdinalMap):
        return self.X.apply_ord(x[0], phi), self.Y.apply_ord(x[1], phi)


def _token(e: Element) -> str:
    return str(e).replace(" ", ".")


def product(X: Presentation, Y: Presentation, dim_cap: int = 6) -> ProductPresentation:
    if X.kind != "simplicial" or Y.kind != "simplicial":
        raise FlavorError("products are formed for simplicial presentations")
    if X.cap is not None or Y.cap is not None:
        raise CappedObjectError("product of a truncated presentation")
    top = max(X.max_dim, 0) + max(Y.max_dim, 0)
    if not X.generators or not Y.generators:
        top = 0
    if top > dim_cap:
        raise CappedObjectError(f"product has cells up to dimension {top} > cap {dim_cap}")
    pair = _PairObject(X, Y)
    pres, ez = materialize(pair, top, complete=True,
                           name_fn=lambda p: f"{_token(p[0])}|{_token(p[1])}",
                           name=f"{X.name}x{Y.name}")
    out = ProductPresentation.__new__(ProductPresentation)
    out.__dict__.update(pres.__dict__)
    out.left, out.right = X, Y
    out._ez = ez
    out.pairs = {}
    for (a, b), e in ez.items():
        if not e.word:
            out.pairs[e.generator] = (a, b)
    return out


def equalizer(f: SSetMap, g: SSetMap) -> Presentation:
    """The largest sub-presentation of the source on which f and g agree."""
    if f.source is not g.source or f.target is not g.target:
        raise MapError("equalizer needs parallel maps")
    X = f.source
    keep = [(name, d) for name, d in X.generators.items() if f.images[name] == g.images[name]]
    kept = {name for name, _ in keep}
    faces = {name: X.faces[name] for name in kept}
    for name in kept:
        for e in faces[name]:
            if e.generator not in kept:
                raise MapError(f"face of {name!r} leaves the equalizer; maps are not simplicial")
    return Presentation(X.kind, keep, faces, name=f"Eq({X.name})")


class _OrbitObject(SimplicialObject):
    """Hom(-, [n]) modulo post-composition with a subgroup of Aut[n]."""

    def __init__(self, kind: str, n: int, group: Sequence[GroupElement]):
        self.R = Representable(kind, n)
        self.kind, self.r = kind, 1
        fl = self.R.flavor
        one = CrossedMorphism(identity(n), GroupElement(n, 0, False, 1), fl)
        gens = [CrossedMorphism(identity(n), g, fl) for g in group]
        H = {one}
        while True:
            grown = H | {self.R._compose(h, g) for h in H for g in gens}
            if grown == H:
                break
            H = grown
        self.H = sorted(H, key=morphism_name)

    def orbit(self, x) -> frozenset:
        return frozenset(self.R._compose(h, x) for h in self.H)

    def elements(self, k: int) -> list:
        seen: dict = {}
        for x in self.R.elements(k):
            seen.setdefault(self.orbit(x), None)
        return list(seen)

    def dim(self, c) -> int:
        return next(iter(c)).source

    def _rep(self, c):
        return min(c, key=morphism_name)

    def apply_ord(self, c, phi: OrdinalMap):
        return self.orbit(self.R.apply_ord(self._rep(c), phi))

    def apply_group(self, c, g: GroupElement):
        return self.orbit(self.R.apply_group(self._rep(c), g))


def orbit_quotient(kind: str, n: int, group: Sequence[GroupElement], name: str = "Q") -> Presentation:
    """The cyclic or dihedral n-object divided by the subgroup generated by ``group``.

    Unlike the standard objects, these have non-free actions, so subdivided
    fixed-point sets are non-empty.
    """
    if kind == "simplicial":
        raise FlavorError("quotients by automorphisms need a cyclic or dihedral kind")
    obj = _OrbitObject(kind, n, group)
    counter = iter(range(10**6))

    def label(c) -> str:
        return f"q{obj.dim(c)}_{next(counter)}"

    return materialize(obj, n + 1, complete=True, name_fn=label, name=name)[0]
