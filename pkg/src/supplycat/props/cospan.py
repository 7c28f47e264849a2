"""Cospans of finite sets, the prop for special commutative Frobenius monoids."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..finset import (
    CompositionError, FinFunction, block_braiding, enumerate_functions, pushout_tables,
)
from . import presentations
from .base import Prop, function_term
from .terms import Compose, dual_term


@dataclass(frozen=True)
class CospanMorphism:
    """``dom -> apex <- cod`` in canonical form.

    Apex elements are numbered by first contact (left ports, then right
    ports); elements hit by neither leg come last.
    """

    dom: int
    cod: int
    apex: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def left_leg(self) -> FinFunction:
        return FinFunction(self.dom, self.apex, self.left)

    @property
    def right_leg(self) -> FinFunction:
        return FinFunction(self.cod, self.apex, self.right)

    @cached_property
    def floating(self) -> int:
        return self.apex - len(set(self.left) | set(self.right))

    @cached_property
    def core(self) -> "CospanMorphism":
        """The same cospan with its floating elements removed."""
        if not self.floating:
            return self
        return CospanMorphism(self.dom, self.cod, self.apex - self.floating, self.left, self.right)

    @cached_property
    def _hash(self) -> int:
        return hash((self.dom, self.cod, self.apex, self.left, self.right))

    def __hash__(self):
        return self._hash

    def __str__(self):
        left = ",".join(map(str, self.left))
        right = ",".join(map(str, self.right))
        return f"{self.dom}->{self.apex}<-{self.cod} [{left} | {right}]"


def _canonical(m, n, apex, left, right) -> CospanMorphism:
    relabel = [0] * (apex + 1)
    nxt = 1
    for e in left:
        if not relabel[e]:
            relabel[e] = nxt
            nxt += 1
    for e in right:
        if not relabel[e]:
            relabel[e] = nxt
            nxt += 1
    for e in range(1, apex + 1):
        if not relabel[e]:
            relabel[e] = nxt
            nxt += 1
    return CospanMorphism(m, n, apex, tuple(relabel[e] for e in left),
                          tuple(relabel[e] for e in right))


def cospan_canonical_form(left: FinFunction, right: FinFunction) -> CospanMorphism:
    """Canonical representative of the raw cospan ``left.dom -> apex <- right.dom``."""
    if left.cod != right.cod:
        raise ValueError(f"legs land in different apexes ({left.cod} and {right.cod})")
    return _canonical(left.dom, right.dom, left.cod, left.table, right.table)


def cospan_of_function(f: FinFunction) -> CospanMorphism:
    """``f: m -> n`` as the cospan ``m -f-> n <-id- n``."""
    return _canonical(f.dom, f.cod, f.cod, f.table, tuple(range(1, f.cod + 1)))


def cospan_of_opfunction(f: FinFunction) -> CospanMorphism:
    """``f: n -> m`` read backwards, as the cospan ``m -id-> m <-f- n``."""
    return _canonical(f.cod, f.dom, f.cod, tuple(range(1, f.cod + 1)), f.table)


def cospan_identity(n: int) -> CospanMorphism:
    ids = tuple(range(1, n + 1))
    return CospanMorphism(n, n, n, ids, ids)


def cospan_compose(f: CospanMorphism, g: CospanMorphism) -> CospanMorphism:
    if f.cod != g.dom:
        raise CompositionError(f"cannot compose cospans {f.dom}->{f.cod} and {g.dom}->{g.cod}")
    apex, into_f, into_g = pushout_tables(f.apex, g.apex, f.right, g.left)
    left = tuple(into_f[e - 1] for e in f.left)
    right = tuple(into_g[e - 1] for e in g.right)
    return _canonical(f.dom, g.cod, apex, left, right)


def cospan_sum(f: CospanMorphism, g: CospanMorphism) -> CospanMorphism:
    k = f.apex
    return _canonical(f.dom + g.dom, f.cod + g.cod, k + g.apex,
                      f.left + tuple(e + k for e in g.left),
                      f.right + tuple(e + k for e in g.right))


def _set_partitions(n: int, max_blocks: int):
    """Restricted growth strings of length ``n`` with at most ``max_blocks`` blocks."""
    if n == 0:
        yield ()
        return

    def grow(prefix, used):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(1, min(used + 1, max_blocks) + 1):
            prefix.append(b)
            yield from grow(prefix, max(used, b))
            prefix.pop()

    yield from grow([], 0)


class CospanProp(Prop):
    name = "Cospan"

    def __init__(self, default_bound: int = 4):
        self.default_bound = default_bound
        self.presentation = presentations.frobenius()

    def identity(self, n):
        return cospan_identity(n)

    def compose(self, f, g):
        return cospan_compose(f, g)

    def monoidal_sum(self, f, g):
        return cospan_sum(f, g)

    def braiding(self, m, n):
        return cospan_of_function(block_braiding(m, n))

    def permutation(self, perm):
        return cospan_of_function(perm)

    def enumerate_hom(self, m, n, bound=None):
        """Canonical cospans ``m -> k <- n`` with ``k <= bound``, floating points included."""
        bound = self.default_bound if bound is None else bound
        out = []
        for rgs in _set_partitions(m + n, bound):
            hit = max(rgs, default=0)
            for floating in range(bound - hit + 1):
                out.append(CospanMorphism(m, n, hit + floating, rgs[:m], rgs[m:]))
        return out

    def scalar_split(self, f):
        return f.core, f.floating

    def with_scalar(self, core, k):
        return CospanMorphism(core.dom, core.cod, core.apex + k, core.left, core.right)

    def generator(self, name):
        gens = {
            "mu": CospanMorphism(2, 1, 1, (1, 1), (1,)),
            "eta": CospanMorphism(0, 1, 1, (), (1,)),
            "delta": CospanMorphism(1, 2, 1, (1,), (1, 1)),
            "epsilon": CospanMorphism(1, 0, 1, (1,), ()),
            "cup": CospanMorphism(0, 2, 1, (), (1, 1)),
            "cap": CospanMorphism(2, 0, 1, (1, 1), ()),
        }
        return gens[name]

    def decompose(self, f):
        gens = self.presentation.generators
        into = function_term(f.left_leg, gens["mu"], gens["eta"])
        out_of = dual_term(function_term(f.right_leg, gens["mu"], gens["eta"]),
                           {"mu": "delta", "eta": "epsilon"})
        return Compose(into, out_of)


def relabel_apex(f: CospanMorphism, perm: tuple[int, ...]) -> tuple[FinFunction, FinFunction]:
    """A raw cospan isomorphic to ``f``, with apex element ``e`` renamed ``perm[e-1]``."""
    left = FinFunction(f.dom, f.apex, tuple(perm[e - 1] for e in f.left))
    right = FinFunction(f.cod, f.apex, tuple(perm[e - 1] for e in f.right))
    return left, right


def raw_cospans(m: int, n: int, apex: int):
    for left in enumerate_functions(m, apex):
        for right in enumerate_functions(n, apex):
            yield left, right


__all__ = [
    "CospanMorphism", "CospanProp", "cospan_canonical_form", "cospan_compose", "cospan_sum",
    "cospan_identity", "cospan_of_function", "cospan_of_opfunction", "relabel_apex", "raw_cospans",
]
