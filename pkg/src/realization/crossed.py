"""Crossed simplicial index categories ΔC, ΔD and their r-fold variants.

Two independent descriptions of the same morphisms live here:

* :class:`CrossedMorphism` -- the normal form ``phi o g`` (``phi`` in Δ,
  ``g`` an automorphism of the source), composed by rewriting generator words
  with the simplicial/dihedral relations;
* :class:`IntegerMapModel` -- the concrete Z_+-functor, i.e. a monotone
  (or antitone) map Z -> Z on the lifted grid of [m]_r, composed as functions.

The object [n]_r is the set of r(n+1) grid points of R/rZ; scaling by n+1
identifies its lift with Z.  A covariant morphism [m]_r -> [n]_r is a
weakly increasing f with f(j + m + 1) = f(j) + n + 1, a contravariant one a
weakly decreasing f with f(j + m + 1) = f(j) - (n + 1); two lifts differing
by a multiple of r(n+1) are the same functor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct
from typing import Iterable, Iterator, Sequence

from .delta import (
    CompositionError,
    OrdinalMap,
    all_maps,
    compose_ord,
    degeneracy,
    epi_mono_factor,
    face,
    from_words,
    identity,
)


@dataclass(frozen=True)
class Flavor:
    kind: str  # "C" or "D"
    r: int = 1

    def __post_init__(self) -> None:
        if self.kind not in ("C", "D"):
            raise ValueError(f"unknown flavor kind {self.kind!r}")
        if self.r < 1:
            raise ValueError("r must be positive")

    def order(self, n: int) -> int:
        """Number of rotations at level n."""
        return self.r * (n + 1)

    def group_order(self, n: int) -> int:
        return self.order(n) * (2 if self.kind == "D" else 1)

    def __str__(self) -> str:
        return f"{self.kind}" if self.r == 1 else f"{self.kind}_{self.r}"


CYCLIC = Flavor("C")
DIHEDRAL = Flavor("D")


@dataclass(frozen=True)
class GroupElement:
    """tau^power o omega^reflected at level n."""

    level: int
    power: int
    reflected: bool
    r: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "power", self.power % self.modulus)

    @property
    def modulus(self) -> int:
        return self.r * (self.level + 1)

    @property
    def is_identity(self) -> bool:
        return self.power == 0 and not self.reflected

    def __call__(self, j: int) -> int:
        return self.power - 1 - j if self.reflected else j + self.power

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if (self.level, self.r) != (other.level, other.r):
            raise CompositionError("group elements live at different levels")
        sign = -1 if self.reflected else 1
        return GroupElement(self.level, self.power + sign * other.power,
                            self.reflected != other.reflected, self.r)

    def inverse(self) -> "GroupElement":
        if self.reflected:
            return self
        return GroupElement(self.level, -self.power, False, self.r)

    def __repr__(self) -> str:
        w = "w" if self.reflected else ""
        return f"t^{self.power}{w}@{self.level}"


def tau(n: int, r: int = 1, power: int = 1) -> GroupElement:
    return GroupElement(n, power, False, r)


def omega(n: int, r: int = 1) -> GroupElement:
    return GroupElement(n, 0, True, r)


def group_identity(n: int, r: int = 1) -> GroupElement:
    return GroupElement(n, 0, False, r)


# --------------------------------------------------------------------------
# the concrete oracle


@dataclass(frozen=True)
class IntegerMapModel:
    source: int
    target: int
    values: tuple[int, ...]
    covariant: bool = True
    r: int = 1

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        if len(vals) != self.source + 1:
            raise ValueError("window must have source + 1 values")
        period = self.r * (self.target + 1)
        shift = (vals[0] // period) * period
        vals = tuple(v - shift for v in vals)
        object.__setattr__(self, "values", vals)
        span = self.target + 1
        if self.covariant:
            ok = all(a <= b for a, b in zip(vals, vals[1:])) and vals[-1] <= vals[0] + span
        else:
            ok = all(a >= b for a, b in zip(vals, vals[1:])) and vals[-1] >= vals[0] - span
        if not ok:
            raise ValueError(f"not a Z_+-functor: {vals} (covariant={self.covariant})")

    def __call__(self, j: int) -> int:
        q, l = divmod(j, self.source + 1)
        sign = 1 if self.covariant else -1
        return self.values[l] + sign * q * (self.target + 1)

    def __matmul__(self, other: "IntegerMapModel") -> "IntegerMapModel":
        return compose_models(self, other)

    def grid(self, count: int | None = None) -> tuple[int, ...]:
        """Values over one full period r(source+1) of the lifted grid."""
        count = self.r * (self.source + 1) if count is None else count
        return tuple(self(j) for j in range(count))

    def with_r(self, r: int) -> "IntegerMapModel":
        return IntegerMapModel(self.source, self.target, self.values, self.covariant, r)


def compose_models(f: IntegerMapModel, g: IntegerMapModel) -> IntegerMapModel:
    if g.target != f.source or f.r != g.r:
        raise CompositionError("integer models not composable")
    return IntegerMapModel(g.source, f.target, tuple(f(g(j)) for j in range(g.source + 1)),
                           f.covariant == g.covariant, f.r)


def model_of_ordinal(phi: OrdinalMap, r: int = 1) -> IntegerMapModel:
    return IntegerMapModel(phi.source, phi.target, phi.values, True, r)


def model_of_group(g: GroupElement) -> IntegerMapModel:
    return IntegerMapModel(g.level, g.level, tuple(g(j) for j in range(g.level + 1)),
                           not g.reflected, g.r)


# --------------------------------------------------------------------------
# normal forms


@dataclass(frozen=True)
class CrossedMorphism:
    phi: OrdinalMap
    g: GroupElement
    flavor: Flavor = CYCLIC

    def __post_init__(self) -> None:
        if self.g.level != self.phi.source:
            raise ValueError("group part must live at the source level")
        if self.g.r != self.flavor.r:
            raise ValueError("group part has the wrong r")
        if self.g.reflected and self.flavor.kind != "D":
            raise ValueError("reflections need the dihedral flavor")

    @property
    def source(self) -> int:
        return self.phi.source

    @property
    def target(self) -> int:
        return self.phi.target

    @property
    def covariant(self) -> bool:
        return not self.g.reflected

    def __matmul__(self, other: "CrossedMorphism") -> "CrossedMorphism":
        return compose_crossed(self, other)

    def __repr__(self) -> str:
        return f"CM({self.phi.values} o {self.g!r} [{self.flavor}])"


def embed(phi: OrdinalMap, flavor: Flavor = CYCLIC) -> CrossedMorphism:
    return CrossedMorphism(phi, group_identity(phi.source, flavor.r), flavor)


def as_crossed(m: OrdinalMap | GroupElement | CrossedMorphism, flavor: Flavor = CYCLIC) -> CrossedMorphism:
    if isinstance(m, CrossedMorphism):
        return m
    if isinstance(m, GroupElement):
        return CrossedMorphism(identity(m.level), m, flavor)
    return embed(m, flavor)


def to_integer_map(m: CrossedMorphism | OrdinalMap | GroupElement, r: int | None = None) -> IntegerMapModel:
    if isinstance(m, OrdinalMap):
        return model_of_ordinal(m, r or 1)
    if isinstance(m, GroupElement):
        return model_of_group(m)
    return compose_models(model_of_ordinal(m.phi, m.flavor.r), model_of_group(m.g))


def group_elements(n: int, flavor: Flavor) -> list[GroupElement]:
    N = flavor.order(n)
    refl = (False, True) if flavor.kind == "D" else (False,)
    return [GroupElement(n, p, e, flavor.r) for e in refl for p in range(N)]


def from_integer_map(model: IntegerMapModel, flavor: Flavor) -> CrossedMorphism:
    """Factor a concrete functor as ``phi o g`` by searching the source automorphisms."""
    if model.r != flavor.r:
        raise ValueError("model and flavor disagree on r")
    for g in group_elements(model.source, flavor):
        if g.reflected == model.covariant:
            continue
        h = compose_models(model, model_of_group(g.inverse()))
        if 0 <= h.values[0] and h.values[-1] <= h.target:
            return CrossedMorphism(OrdinalMap(h.source, h.target, h.values), g, flavor)
    raise ValueError(f"model {model} does not factor in {flavor}")


# --------------------------------------------------------------------------
# generator words and rewriting


@dataclass(frozen=True)
class Letter:
    """A generator in a word.  ``target`` is the codomain level."""

    kind: str  # "d", "s", "t", "w" or "g" (collapsed group element)
    index: int = 0
    target: int = 0
    group: GroupElement | None = field(default=None, compare=True)

    @property
    def source(self) -> int:
        return {"d": self.target - 1, "s": self.target + 1}.get(self.kind, self.target)

    @property
    def simplicial(self) -> bool:
        return self.kind in ("d", "s")

    def __repr__(self) -> str:
        if self.kind == "g":
            return repr(self.group)
        if self.simplicial:
            return f"{self.kind}{self.index}@{self.target}"
        return f"{self.kind}@{self.target}"


def d_(i: int, n: int) -> Letter:
    return Letter("d", i, n)


def s_(i: int, n: int) -> Letter:
    return Letter("s", i, n)


def t_(n: int) -> Letter:
    return Letter("t", 0, n)


def w_(n: int) -> Letter:
    return Letter("w", 0, n)


def g_(g: GroupElement) -> Letter:
    return Letter("g", 0, g.level, g)


class WordError(ValueError):
    pass


def parse_word(text: str, level: int) -> list[Letter]:
    """Parse ``"w d0 s1 t"``; ``level`` is the codomain of the leftmost token."""
    letters = []
    cur = level
    for tok in text.replace(",", " ").split():
        if tok in ("t", "w"):
            letters.append(Letter(tok, 0, cur))
        elif tok[0] in "ds" and tok[1:].isdigit():
            letters.append(Letter(tok[0], int(tok[1:]), cur))
        else:
            raise WordError(f"bad token {tok!r}")
        cur = letters[-1].source
    check_word(letters)
    return letters


def check_word(word: Sequence[Letter]) -> None:
    for a, b in zip(word, word[1:]):
        if a.source != b.target:
            raise WordError(f"{a!r} cannot follow {b!r}")
    for x in word:
        if x.kind == "d" and not (x.target >= 1 and 0 <= x.index <= x.target):
            raise WordError(f"invalid face {x!r}")
        if x.kind == "s" and not 0 <= x.index <= x.target:
            raise WordError(f"invalid degeneracy {x!r}")
        if x.target < 0 or x.source < 0:
            raise WordError(f"negative level in {x!r}")


@lru_cache(maxsize=1 << 16)
def letter_group(x: Letter, r: int) -> GroupElement:
    if x.kind == "g":
        return x.group
    if x.kind == "t":
        return tau(x.target, r)
    return omega(x.target, r)


def letter_map(x: Letter) -> OrdinalMap:
    return face(x.index, x.target) if x.kind == "d" else degeneracy(x.index, x.target)


def _push_tau(x: Letter, r: int) -> tuple[Letter, GroupElement]:
    n = x.target
    if x.kind == "d":
        if x.index != n:
            return d_(x.index + 1, n), tau(n - 1, r)
        return d_(0, n), group_identity(n - 1, r)
    if x.index != n:
        return s_(x.index + 1, n), tau(n + 1, r)
    return s_(0, n), tau(n + 1, r, 2)


def _push_omega(x: Letter, r: int) -> tuple[Letter, GroupElement]:
    n = x.target
    return Letter(x.kind, n - x.index, n), omega(x.source, r)


@lru_cache(maxsize=1 << 16)
def push_group(g: GroupElement, x: Letter) -> tuple[Letter, GroupElement]:
    """Rewrite ``g o x`` as ``x' o g'`` with the (SD-*) relations."""
    acc = group_identity(x.source, g.r)
    cur = x
    if g.reflected:
        cur, acc = _push_omega(cur, g.r)
    for _ in range(g.power):
        cur, h = _push_tau(cur, g.r)
        acc = h * acc
    return cur, acc


@lru_cache(maxsize=1 << 16)
def _simplicial_step(x: Letter, y: Letter) -> list[Letter] | None:
    """One (S-*) rewrite on ``x o y``; None when the pair is already ordered."""
    if x.kind == "s" and y.kind == "d":
        i, j, n = x.index, y.index, x.target
        if j < i:
            return [d_(j, n), s_(i - 1, n - 1)]
        if j == i or j == i + 1:
            return []
        return [d_(j - 1, n), s_(i, n - 1)]
    if x.kind == "d" and y.kind == "d" and x.index <= y.index:
        return [d_(y.index + 1, x.target), d_(x.index, x.target - 1)]
    if x.kind == "s" and y.kind == "s" and x.index >= y.index:
        return [s_(y.index, x.target), s_(x.index + 1, x.target + 1)]
    return None


def rewrite(word: Sequence[Letter], flavor: Flavor) -> tuple[list[Letter], GroupElement]:
    """Reduce a composable word to (simplicial normal word, trailing group element)."""
    check_word(word)
    if not word:
        raise WordError("empty word: identity needs a level")
    r = flavor.r
    bottom = word[-1].source
    cur: list[Letter] = []
    for x in word:
        if x.simplicial:
            cur.append(x)
        else:
            g = letter_group(x, r)
            if g.reflected and flavor.kind != "D":
                raise WordError("omega is not available in the cyclic flavor")
            cur.append(g_(g))
    changed = True
    while changed:
        changed = False
        # push group letters rightwards past simplicial ones
        for k in range(len(cur) - 1):
            a, b = cur[k], cur[k + 1]
            if a.kind == "g" and b.simplicial:
                x2, h = push_group(a.group, b)
                cur[k:k + 2] = [x2] + ([] if h.is_identity else [g_(h)])
                changed = True
                break
            if a.kind == "g" and b.kind == "g":
                prod = a.group * b.group
                cur[k:k + 2] = [] if prod.is_identity else [g_(prod)]
                changed = True
                break
        if changed:
            continue
        for k in range(len(cur) - 1):
            a, b = cur[k], cur[k + 1]
            if a.simplicial and b.simplicial:
                rep = _simplicial_step(a, b)
                if rep is not None:
                    cur[k:k + 2] = rep
                    changed = True
                    break
    g = group_identity(bottom, r)
    if cur and cur[-1].kind == "g":
        g = cur.pop().group
    return cur, g


def word_to_ordinal(word: Sequence[Letter], source: int) -> OrdinalMap:
    result = identity(source)
    for x in reversed(word):
        result = compose_ord(letter_map(x), result)
    return result


def normal_form(word: Sequence[Letter] | str, flavor: Flavor = CYCLIC, level: int | None = None) -> CrossedMorphism:
    if isinstance(word, str):
        if level is None:
            raise WordError("a text word needs its top level")
        word = parse_word(word, level)
    simp, g = rewrite(word, flavor)
    return CrossedMorphism(word_to_ordinal(simp, g.level), g, flavor)


def morphism_word(m: CrossedMorphism) -> list[Letter]:
    faces, degs = epi_mono_factor(m.phi)
    word: list[Letter] = []
    level = m.phi.target
    for i in faces:
        word.append(d_(i, level))
        level -= 1
    for j in degs:
        word.append(s_(j, level))
        level += 1
    if not m.g.is_identity:
        word.append(g_(m.g))
    return word


def compose_crossed(a: CrossedMorphism, b: CrossedMorphism) -> CrossedMorphism:
    """a o b, computed purely by rewriting."""
    if a.flavor != b.flavor:
        raise CompositionError("flavor mismatch")
    if b.target != a.source:
        raise CompositionError(f"cannot compose level {a.source} after {b.target}")
    word = morphism_word(a) + morphism_word(b)
    if not word:
        return a
    return normal_form(word, a.flavor)


def word_model(word: Sequence[Letter], r: int) -> IntegerMapModel:
    """Oracle: compose the concrete functors of each letter."""
    result = None
    for x in reversed(word):
        m = model_of_group(letter_group(x, r)) if not x.simplicial else model_of_ordinal(letter_map(x), r)
        result = m if result is None else compose_models(m, result)
    return result


# --------------------------------------------------------------------------
# enumeration


def enumerate_hom(m: int, n: int, flavor: Flavor) -> list[CrossedMorphism]:
    return [CrossedMorphism(phi, g, flavor)
            for g in group_elements(m, flavor) for phi in all_maps(m, n)]


def enumerate_aut(n: int, flavor: Flavor) -> list[CrossedMorphism]:
    return [CrossedMorphism(identity(n), g, flavor) for g in group_elements(n, flavor)]


def brute_force_functors(m: int, n: int, flavor: Flavor) -> set[IntegerMapModel]:
    """Every concrete Z_+-functor [m]_r -> [n]_r found by scanning grid windows."""
    N = flavor.order(n)
    span = n + 1
    found = set()
    orientations = (True, False) if flavor.kind == "D" else (True,)
    for cov in orientations:
        for start in range(N):
            lo, hi = (start, start + span) if cov else (start - span, start)
            for rest in iproduct(range(lo, hi + 1), repeat=m):
                vals = (start,) + rest
                try:
                    found.add(IntegerMapModel(m, n, vals, cov, flavor.r))
                except ValueError:
                    pass
    return found


# --------------------------------------------------------------------------
# relations and axiom checks


def relation_instances(n: int, flavor: Flavor) -> list[tuple[str, list[Letter], list[Letter]]]:
    """All instances of (S-1)..(SD-4) whose codomain is level ``n``.

    Each entry is ``(name, lhs, rhs)``; an empty side means the identity of [n].
    """
    out = []
    N = flavor.order(n)
    # (S-1) d^i d^j = d^j d^{i-1}, j < i
    for i in range(n + 1):
        for j in range(i):
            if n >= 2:
                out.append(("S-1", [d_(i, n), d_(j, n - 1)], [d_(j, n), d_(i - 1, n - 1)]))
    # (S-2) s^i s^j = s^{j-1} s^i, i < j
    for j in range(n + 2):
        for i in range(j):
            out.append(("S-2", [s_(i, n), s_(j, n + 1)], [s_(j - 1, n), s_(i, n + 1)]))
    # (S-3) s^i d^j
    for i in range(n + 1):
        for j in range(n + 2):
            lhs = [s_(i, n), d_(j, n + 1)]
            if j < i:
                rhs = [d_(j, n), s_(i - 1, n - 1)]
            elif j in (i, i + 1):
                rhs = []
            else:
                rhs = [d_(j - 1, n), s_(i, n - 1)]
            out.append(("S-3", lhs, rhs))
    out.append(("D-1", [t_(n)] * N, []))
    out.append(("D-2", [t_(n)] + ([w_(n)] if flavor.kind == "D" else []),
                ([w_(n)] if flavor.kind == "D" else []) + [t_(n)] * (1 if flavor.kind == "C" else N - 1)))
    if flavor.kind == "D":
        out.append(("D-1", [w_(n), w_(n)], []))
        for i in range(n + 1):
            if n >= 1:
                out.append(("SD-1", [w_(n), d_(i, n)], [d_(n - i, n), w_(n - 1)]))
            out.append(("SD-2", [w_(n), s_(i, n)], [s_(n - i, n), w_(n + 1)]))
    for i in range(n + 1):
        if n >= 1:
            rhs = [d_(i + 1, n), t_(n - 1)] if i != n else [d_(0, n)]
            out.append(("SD-3", [t_(n), d_(i, n)], rhs))
        rhs = [s_(i + 1, n), t_(n + 1)] if i != n else [s_(0, n), t_(n + 1), t_(n + 1)]
        out.append(("SD-4", [t_(n), s_(i, n)], rhs))
    return [(name, l, r_) for name, l, r_ in out if _valid(l) and _valid(r_)]


def _valid(word: Sequence[Letter]) -> bool:
    try:
        check_word(word)
    except WordError:
        return False
    return True


def _side_model(word: Sequence[Letter], n: int, r: int) -> IntegerMapModel:
    return word_model(word, r) if word else model_of_ordinal(identity(n), r)


@dataclass
class AxiomReport:
    flavor: Flavor
    max_level: int
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, name: str, k: int = 1) -> None:
        self.checks[name] = self.checks.get(name, 0) + k

    def fail(self, msg: str) -> None:
        if len(self.failures) < 50:
            self.failures.append(msg)


def check_group_structure(n: int, flavor: Flavor, report: AxiomReport) -> None:
    auts = enumerate_aut(n, flavor)
    models = [to_integer_map(a) for a in auts]
    if len(set(models)) != len(models):
        report.fail(f"level {n}: automorphisms not distinct")
    if len(models) != flavor.group_order(n):
        report.fail(f"level {n}: |Aut| = {len(models)}, expected {flavor.group_order(n)}")
    index = {m: k for k, m in enumerate(models)}
    table = []
    for a in models:
        row = []
        for b in models:
            c = compose_models(a, b)
            if c not in index:
                report.fail(f"level {n}: Aut not closed under composition")
                return
            row.append(index[c])
        table.append(row)
    ident = index[model_of_ordinal(identity(n), flavor.r)]

    def power(k: int, e: int) -> int:
        acc = ident
        for _ in range(e):
            acc = table[acc][k]
        return acc

    def order(k: int) -> int:
        e, acc = 1, k
        while acc != ident:
            acc = table[acc][k]
            e += 1
        return e

    N = flavor.order(n)
    rot = index[model_of_group(tau(n, flavor.r))]
    if order(rot) != N:
        report.fail(f"level {n}: tau has order {order(rot)}, expected {N}")
    generated = {power(rot, e) for e in range(N)}
    if flavor.kind == "D":
        ref = index[model_of_group(omega(n, flavor.r))]
        if order(ref) != 2:
            report.fail(f"level {n}: omega is not an involution")
        if table[table[ref][rot]][ref] != power(rot, N - 1):
            report.fail(f"level {n}: omega tau omega != tau^-1")
        generated |= {table[x][ref] for x in generated}
    if len(generated) != len(models):
        report.fail(f"level {n}: tau{', omega' if flavor.kind == 'D' else ''} do not generate Aut")
    report.count("group tables")


def check_relations_in_model(n: int, flavor: Flavor, report: AxiomReport) -> None:
    for name, lhs, rhs in relation_instances(n, flavor):
        top = lhs[0].target
        if _side_model(lhs, top, flavor.r) != _side_model(rhs, top, flavor.r):
            report.fail(f"{name} fails in the integer model at level {n}: {lhs} vs {rhs}")
        report.count("relations")


def generator_letters(n: int, flavor: Flavor, max_level: int) -> list[Letter]:
    """Generators with codomain n whose domain stays within max_level."""
    out = [d_(i, n) for i in range(n + 1)] if n >= 1 else []
    if n + 1 <= max_level:
        out += [s_(i, n) for i in range(n + 1)]
    out.append(t_(n))
    if flavor.kind == "D":
        out.append(w_(n))
    return out


def iter_words(max_len: int, flavor: Flavor, max_level: int) -> Iterator[list[Letter]]:
    def grow(word: list[Letter]) -> Iterator[list[Letter]]:
        yield word
        if len(word) >= max_len:
            return
        for x in generator_letters(word[-1].source, flavor, max_level):
            yield from grow(word + [x])

    for n in range(max_level + 1):
        for x in generator_letters(n, flavor, max_level):
            yield from grow([x])


def check_rewriting(flavor: Flavor, max_level: int, max_len: int, report: AxiomReport) -> None:
    """Rewriting normal form against oracle composition, every word exhaustively."""
    gens_cache: dict[int, list[Letter]] = {}

    def gens(n: int) -> list[Letter]:
        if n not in gens_cache:
            gens_cache[n] = generator_letters(n, flavor, max_level)
        return gens_cache[n]

    letter_models = {}

    def lmodel(x: Letter) -> IntegerMapModel:
        if x not in letter_models:
            letter_models[x] = word_model([x], flavor.r)
        return letter_models[x]

    def visit(word: list[Letter], model: IntegerMapModel) -> None:
        nf = normal_form(word, flavor)
        if to_integer_map(nf) != model:
            report.fail(f"rewriting disagrees with oracle on {word}: {nf}")
        report.count("words")
        if len(word) >= max_len:
            return
        for x in gens(word[-1].source):
            visit(word + [x], compose_models(model, lmodel(x)))

    if max_len < 1:
        return
    for n in range(max_level + 1):
        for x in gens(n):
            visit([x], lmodel(x))


def check_factorization(flavor: Flavor, max_level: int, report: AxiomReport) -> None:
    for m in range(max_level + 1):
        for n in range(max_level + 1):
            homs = enumerate_hom(m, n, flavor)
            models = [to_integer_map(h) for h in homs]
            if len(set(models)) != len(models):
                report.fail(f"Hom([{m}],[{n}]): normal forms collide")
            brute = brute_force_functors(m, n, flavor)
            if set(models) != brute:
                report.fail(f"Hom([{m}],[{n}]): {len(set(models))} normal forms vs {len(brute)} functors")
            for h, mod in zip(homs, models):
                if from_integer_map(mod, flavor) != h:
                    report.fail(f"factorization of {mod} is not {h}")
            report.count("hom sets")


def check_axioms(flavor: Flavor, max_level: int, max_word_len: int = 6,
                 word_level: int | None = None, factor_level: int = 2) -> AxiomReport:
    """Group structure, relations, unique factorization and rewriting vs oracle."""
    if max_level > 5:
        raise ValueError("max_level is capped at 5")
    report = AxiomReport(flavor, max_level)
    for n in range(max_level + 1):
        check_group_structure(n, flavor, report)
        check_relations_in_model(n, flavor, report)
    check_factorization(flavor, min(factor_level, max_level), report)
    check_rewriting(flavor, max_level if word_level is None else min(word_level, max_level),
                    max_word_len, report)
    return report
