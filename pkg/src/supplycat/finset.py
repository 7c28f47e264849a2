"""Functions between finite ordinals, permutations, and pushouts.

Ordinals are 1-based: the ordinal ``n`` is ``{1, ..., n}``, and a function
``m -> n`` is stored as a table of length ``m`` with entries in ``1..n``.
Composition is written in diagrammatic order throughout.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Sequence


class CompositionError(ValueError):
    """Raised when two morphisms with mismatched boundaries are composed."""


@dataclass(frozen=True, eq=False)
class FinFunction:
    dom: int
    cod: int
    table: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.table, tuple):
            object.__setattr__(self, "table", tuple(self.table))
        if self.dom < 0 or self.cod < 0:
            raise ValueError("ordinals are natural numbers")
        if len(self.table) != self.dom:
            raise ValueError(f"table of length {len(self.table)} for domain {self.dom}")
        for e in self.table:
            if not 1 <= e <= self.cod:
                raise ValueError(f"entry {e} outside 1..{self.cod}")

    def __eq__(self, other):
        if not isinstance(other, FinFunction):
            return NotImplemented
        return (self.dom, self.cod, self.table) == (other.dom, other.cod, other.table)

    def __hash__(self):
        return hash((self.dom, self.cod, self.table))

    def __call__(self, i: int) -> int:
        return self.table[i - 1]

    def __repr__(self):
        return f"FinFunction({self.dom}->{self.cod}: {self.table})"

    def __str__(self):
        body = ",".join(map(str, self.table))
        return f"{self.dom}->{self.cod} ({body})"

    @property
    def signature(self) -> str:
        return f"{self.dom}->{self.cod}"

    def is_injective(self) -> bool:
        return len(set(self.table)) == self.dom

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.cod

    def is_bijective(self) -> bool:
        return self.dom == self.cod and self.is_injective()

    def fibre_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.cod
        for e in self.table:
            sizes[e - 1] += 1
        return tuple(sizes)


class Permutation(FinFunction):
    """A bijection ``n -> n``."""

    def __init__(self, table: Sequence[int]):
        table = tuple(table)
        super().__init__(len(table), len(table), table)
        if sorted(table) != list(range(1, len(table) + 1)):
            raise ValueError(f"{table} is not a permutation")

    @property
    def size(self) -> int:
        return self.dom

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, e in enumerate(self.table, 1):
            inv[e - 1] = i
        return Permutation(inv)

    def __repr__(self):
        return f"Permutation({self.table})"


def identity_fn(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def as_permutation(f: FinFunction) -> Permutation:
    if isinstance(f, Permutation):
        return f
    if not f.is_bijective():
        raise ValueError(f"{f!r} is not a bijection")
    return Permutation(f.table)


def compose_fn(f: FinFunction, g: FinFunction) -> FinFunction:
    """``f ; g``: first ``f`` then ``g``."""
    if f.cod != g.dom:
        raise CompositionError(f"cannot compose {f.signature} with {g.signature}")
    table = tuple(g.table[e - 1] for e in f.table)
    if isinstance(f, Permutation) and isinstance(g, Permutation):
        return Permutation(table)
    return FinFunction(f.dom, g.cod, table)


def tensor_fn(f: FinFunction, g: FinFunction) -> FinFunction:
    """Disjoint union: ``g`` is placed after ``f`` and shifted by ``f.cod``."""
    table = f.table + tuple(e + f.cod for e in g.table)
    if isinstance(f, Permutation) and isinstance(g, Permutation):
        return Permutation(table)
    return FinFunction(f.dom + g.dom, f.cod + g.cod, table)


def block_braiding(m: int, n: int) -> Permutation:
    """Swap a block of ``m`` wires past a block of ``n`` wires."""
    return Permutation([n + i for i in range(1, m + 1)] + list(range(1, n + 1)))


def grid_transpose(rows: int, cols: int) -> Permutation:
    """Send ``rows`` blocks of ``cols`` wires to ``cols`` blocks of ``rows`` wires.

    Position ``(r, c)`` (block ``r``, offset ``c``) moves to position ``(c, r)``.
    """
    table = []
    for r in range(1, rows + 1):
        for c in range(1, cols + 1):
            table.append((c - 1) * rows + r)
    return Permutation(table)


def enumerate_functions(m: int, n: int) -> list[FinFunction]:
    """All ``n**m`` functions ``m -> n`` in lexicographic table order."""
    return [FinFunction(m, n, t) for t in itertools.product(range(1, n + 1), repeat=m)]


def enumerate_permutations(n: int) -> list[Permutation]:
    perms = [Permutation(t) for t in itertools.permutations(range(1, n + 1))]
    assert len(perms) == factorial(n)
    return perms


@dataclass(frozen=True)
class PushoutResult:
    apex: int
    left_leg: FinFunction
    right_leg: FinFunction


def pushout_tables(b: int, c: int, f: tuple[int, ...], g: tuple[int, ...]):
    """Pushout on raw 1-based tables; returns ``(apex, left_table, right_table)``."""
    parent = list(range(b + c))

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for x, y in zip(f, g):
        rx, ry = find(x - 1), find(b + y - 1)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            parent[ry] = rx
    labels: dict[int, int] = {}
    numbered = []
    for x in range(b + c):
        root = find(x)
        label = labels.get(root)
        if label is None:
            label = labels[root] = len(labels) + 1
        numbered.append(label)
    return len(labels), tuple(numbered[:b]), tuple(numbered[b:])


def pushout(f: FinFunction, g: FinFunction) -> PushoutResult:
    """Pushout of the span ``b <-f- a -g-> c``.

    Classes of ``b + c`` are numbered by their smallest member, with the
    elements of ``b`` ordered before those of ``c``.
    """
    if f.dom != g.dom:
        raise CompositionError(f"span legs {f.signature} and {g.signature} have different domains")
    apex, left, right = pushout_tables(f.cod, g.cod, f.table, g.table)
    return PushoutResult(apex, FinFunction(f.cod, apex, left), FinFunction(g.cod, apex, right))
