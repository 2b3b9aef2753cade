"""Finite ordinals [n] = {0 < ... < n} and order-preserving maps between them.

Maps are stored by their value sequence.  Words in the generators use the
convention

    f = d^{i_1} o ... o d^{i_k} o s^{j_1} o ... o s^{j_l}

with ``i_1 > ... > i_k`` and ``j_1 < ... < j_l``; that pair of lists is the
unique normal form returned by :func:`epi_mono_factor`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Hashable, Iterator, Sequence


class CompositionError(ValueError):
    """Raised when two morphisms are not composable."""


@dataclass(frozen=True)
class OrdinalMap:
    source: int
    target: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.source < 0 or self.target < 0:
            raise ValueError("ordinals are non-negative")
        if len(self.values) != self.source + 1:
            raise ValueError(f"expected {self.source + 1} values, got {len(self.values)}")
        prev = 0
        for v in self.values:
            if v < prev or v > self.target:
                raise ValueError(f"not an order map [{self.source}]->[{self.target}]: {self.values}")
            prev = v

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __matmul__(self, other: "OrdinalMap") -> "OrdinalMap":
        return compose_ord(self, other)

    def __repr__(self) -> str:
        return f"OrdinalMap([{self.source}]->[{self.target}], {self.values})"

    @property
    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.target + 1))

    @property
    def is_identity(self) -> bool:
        return self.source == self.target and self.values == tuple(range(self.source + 1))


def identity(n: int) -> OrdinalMap:
    return OrdinalMap(n, n, tuple(range(n + 1)))


def face(i: int, n: int) -> OrdinalMap:
    """d^i : [n-1] -> [n], skipping ``i``."""
    if n < 1 or not 0 <= i <= n:
        raise ValueError(f"no face d^{i} into [{n}]")
    return OrdinalMap(n - 1, n, tuple(k if k < i else k + 1 for k in range(n)))


def degeneracy(i: int, n: int) -> OrdinalMap:
    """s^i : [n+1] -> [n], hitting ``i`` twice."""
    if not 0 <= i <= n:
        raise ValueError(f"no degeneracy s^{i} onto [{n}]")
    return OrdinalMap(n + 1, n, tuple(k if k <= i else k - 1 for k in range(n + 2)))


def compose_ord(f: OrdinalMap, g: OrdinalMap) -> OrdinalMap:
    """Return f o g (apply ``g`` first)."""
    if g.target != f.source:
        raise CompositionError(f"cannot compose [{f.source}]->[{f.target}] after [{g.source}]->[{g.target}]")
    return OrdinalMap(g.source, f.target, tuple(f.values[v] for v in g.values))


def epi_mono_factor(f: OrdinalMap) -> tuple[list[int], list[int]]:
    image = set(f.values)
    faces = sorted((k for k in range(f.target + 1) if k not in image), reverse=True)
    degeneracies = [j for j in range(f.source) if f.values[j] == f.values[j + 1]]
    return faces, degeneracies


def from_words(faces: Sequence[int], degeneracies: Sequence[int], source: int) -> OrdinalMap:
    """Recompose a face/degeneracy word acting on ``[source]``."""
    result = identity(source)
    level = source
    for j in reversed(degeneracies):
        level -= 1
        result = compose_ord(degeneracy(j, level), result)
    for i in reversed(faces):
        level += 1
        result = compose_ord(face(i, level), result)
    return result


def mono_part(f: OrdinalMap) -> OrdinalMap:
    """The injection onto the image of ``f``."""
    image = sorted(set(f.values))
    return OrdinalMap(len(image) - 1, f.target, tuple(image))


def epi_part(f: OrdinalMap) -> OrdinalMap:
    """The surjection ``e`` with ``f = mono_part(f) o e``."""
    image = sorted(set(f.values))
    rank = {v: k for k, v in enumerate(image)}
    return OrdinalMap(f.source, len(image) - 1, tuple(rank[v] for v in f.values))


def section(epi: OrdinalMap) -> OrdinalMap:
    """Right inverse of a surjection picking the least element of each fibre."""
    if not epi.is_surjective:
        raise ValueError("section of a non-surjective map")
    first = {}
    for k, v in enumerate(epi.values):
        first.setdefault(v, k)
    return OrdinalMap(epi.target, epi.source, tuple(first[v] for v in range(epi.target + 1)))


def all_maps(m: int, n: int) -> Iterator[OrdinalMap]:
    """Every order map [m] -> [n], lexicographically."""
    for vals in combinations_with_replacement(range(n + 1), m + 1):
        yield OrdinalMap(m, n, vals)


def surjections(m: int, n: int) -> Iterator[OrdinalMap]:
    return (f for f in all_maps(m, n) if f.is_surjective)


def injections(m: int, n: int) -> Iterator[OrdinalMap]:
    return (f for f in all_maps(m, n) if f.is_injective)


def degeneracy_word_map(word: Sequence[int], level: int) -> OrdinalMap:
    """The surjection s^{j_1} o ... o s^{j_l} onto ``[level]`` for increasing ``word``."""
    return from_words([], word, level + len(word))


@dataclass(frozen=True)
class LinearOrder:
    labels: tuple[Hashable, ...]

    def __post_init__(self) -> None:
        if not self.labels:
            raise ValueError("empty linear order")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")

    def __len__(self) -> int:
        return len(self.labels)


def canonical_iso(order: LinearOrder | Sequence[Hashable]) -> dict[Hashable, int]:
    """The unique order isomorphism onto [card - 1]."""
    if not isinstance(order, LinearOrder):
        order = LinearOrder(tuple(order))
    return {label: k for k, label in enumerate(order.labels)}
