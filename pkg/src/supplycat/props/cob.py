"""Unoriented 1-cobordisms: the prop generated by a self-dual cup and cap.

A morphism ``m -> n`` is a perfect matching on its ``m + n`` boundary
points together with a count of closed circles.  Ports ``1..m`` are the
inputs and ``m+1..m+n`` the outputs.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..finset import CompositionError, Permutation, block_braiding
from . import presentations
from .base import Prop, permutation_term
from .cospan import CospanMorphism, _canonical
from .terms import Compose, Generator, Id, PropTerm, Sum


@dataclass(frozen=True)
class CobMorphism:
    dom: int
    cod: int
    pairing: tuple[int, ...]
    circles: int = 0

    def __post_init__(self):
        size = self.dom + self.cod
        if len(self.pairing) != size:
            raise ValueError(f"pairing of length {len(self.pairing)} for {size} ports")
        for p, q in enumerate(self.pairing, 1):
            if not 1 <= q <= size or q == p or self.pairing[q - 1] != p:
                raise ValueError(f"pairing {self.pairing} is not a fixed-point-free involution")
        if self.circles < 0:
            raise ValueError("negative circle count")

    def pairs(self) -> list[tuple[int, int]]:
        return [(p, q) for p, q in enumerate(self.pairing, 1) if p < q]

    def __str__(self):
        body = " ".join(f"{p}-{q}" for p, q in self.pairs())
        return f"{self.dom}->{self.cod} [{body}] o{self.circles}"


def cob_identity(n: int) -> CobMorphism:
    return cob_of_permutation(Permutation(range(1, n + 1)))


def cob_of_permutation(perm: Permutation) -> CobMorphism:
    s = perm.size
    pairing = [0] * (2 * s)
    for i in range(1, s + 1):
        pairing[i - 1] = s + perm(i)
        pairing[s + perm(i) - 1] = i
    return CobMorphism(s, s, tuple(pairing))


def cob_compose(f: CobMorphism, g: CobMorphism) -> CobMorphism:
    """Glue along the shared boundary, following each strand to its end."""
    if f.cod != g.dom:
        raise CompositionError(f"cannot compose {f.dom}->{f.cod} with {g.dom}->{g.cod}")
    m, k, n = f.dom, f.cod, g.cod
    # A port is (side, index); side 0 is f, side 1 is g.  The interface is
    # f's outputs, identified with g's inputs.

    def cross(side, p):
        # leaving an interface port on one side enters the same point on the other
        if side == 0 and p > m:
            return 1, p - m
        if side == 1 and p <= k:
            return 0, m + p
        return None

    def external(side, p):
        if side == 0 and p <= m:
            return p
        if side == 1 and p > k:
            return m + (p - k)
        return None

    pairing = [0] * (m + n)
    seen_interface = [False] * (k + 1)
    starts = [(0, p) for p in range(1, m + 1)] + [(1, p) for p in range(k + 1, k + n + 1)]
    for side, p in starts:
        start = external(side, p)
        if pairing[start - 1]:
            continue
        morph = f if side == 0 else g
        q = morph.pairing[p - 1]
        while True:
            nxt = cross(side, q)
            if nxt is None:
                break
            seen_interface[q - m if side == 0 else q] = True
            side, q = nxt
            morph = f if side == 0 else g
            q = morph.pairing[q - 1]
        end = external(side, q)
        pairing[start - 1] = end
        pairing[end - 1] = start

    # whatever interface points were never crossed lie on closed loops
    loops = 0
    for j in range(1, k + 1):
        if seen_interface[j]:
            continue
        loops += 1
        side, q = 0, m + j
        while True:
            seen_interface[q - m if side == 0 else q] = True
            morph = f if side == 0 else g
            q = morph.pairing[q - 1]
            side, q = cross(side, q)
            if seen_interface[q - m if side == 0 else q]:
                break
    return CobMorphism(m, n, tuple(pairing), f.circles + g.circles + loops)


def cob_sum(f: CobMorphism, g: CobMorphism) -> CobMorphism:
    m1, n1, m2, n2 = f.dom, f.cod, g.dom, g.cod

    def place_f(p):
        return p if p <= m1 else m1 + m2 + (p - m1)

    def place_g(p):
        return m1 + p if p <= m2 else m1 + m2 + n1 + (p - m2)

    pairing = [0] * (m1 + m2 + n1 + n2)
    for p, q in enumerate(f.pairing, 1):
        pairing[place_f(p) - 1] = place_f(q)
    for p, q in enumerate(g.pairing, 1):
        pairing[place_g(p) - 1] = place_g(q)
    return CobMorphism(m1 + m2, n1 + n2, tuple(pairing), f.circles + g.circles)


def perfect_matchings(size: int):
    """All fixed-point-free involutions on ``1..size``, as pairing tables."""
    if size % 2:
        return
    table = [0] * size

    def go():
        try:
            p = table.index(0) + 1
        except ValueError:
            yield tuple(table)
            return
        for q in range(p + 1, size + 1):
            if table[q - 1] == 0:
                table[p - 1], table[q - 1] = q, p
                yield from go()
                table[p - 1] = table[q - 1] = 0

    yield from go()


class CobProp(Prop):
    name = "Cob"

    def __init__(self, default_bound: int = 1):
        # default_bound caps the number of closed circles during enumeration
        self.default_bound = default_bound
        self.presentation = presentations.self_dual()

    def identity(self, n):
        return cob_identity(n)

    def compose(self, f, g):
        return cob_compose(f, g)

    def monoidal_sum(self, f, g):
        return cob_sum(f, g)

    def braiding(self, m, n):
        return cob_of_permutation(block_braiding(m, n))

    def permutation(self, perm):
        return cob_of_permutation(perm)

    def enumerate_hom(self, m, n, bound=None):
        bound = self.default_bound if bound is None else bound
        return [CobMorphism(m, n, pairing, c)
                for pairing in perfect_matchings(m + n)
                for c in range(bound + 1)]

    def scalar_split(self, f):
        return CobMorphism(f.dom, f.cod, f.pairing), f.circles

    def with_scalar(self, core, k):
        return CobMorphism(core.dom, core.cod, core.pairing, core.circles + k)

    def generator(self, name):
        return {"cup": CobMorphism(0, 2, (2, 1)), "cap": CobMorphism(2, 0, (2, 1))}[name]

    def decompose(self, f):
        gens = self.presentation.generators
        cup, cap = gens["cup"], gens["cap"]
        m = f.dom
        through = [(p, q - m) for p, q in f.pairs() if p <= m < q]
        caps = [(p, q) for p, q in f.pairs() if q <= m]
        cups = [(p - m, q - m) for p, q in f.pairs() if p > m]
        t = len(through)

        # inputs: through-strands first (in input order), then cap pairs
        first = [0] * m
        for pos, (p, _) in enumerate(through, 1):
            first[p - 1] = pos
        for j, (p, q) in enumerate(caps):
            first[p - 1], first[q - 1] = t + 2 * j + 1, t + 2 * j + 2
        # outputs: through-strands keep their order, then cup pairs
        last = [0] * (t + 2 * len(cups))
        for pos, (_, q) in enumerate(through, 1):
            last[pos - 1] = q
        for j, (p, q) in enumerate(cups):
            last[t + 2 * j], last[t + 2 * j + 1] = p, q

        term: PropTerm = permutation_term(Permutation(first))
        if caps:
            term = Compose(term, _sum_with_id(t, [cap] * len(caps)))
        if cups:
            term = Compose(term, _sum_with_id(t, [cup] * len(cups)))
        term = Compose(term, permutation_term(Permutation(last)))
        circle = Compose(cup, cap)
        for _ in range(f.circles):
            term = Sum(term, circle)
        return term


def _sum_with_id(t: int, blocks: list[Generator]) -> PropTerm:
    term: PropTerm = Id(t)
    for b in blocks:
        term = Sum(term, b)
    return term


def cob_to_cospan(f: CobMorphism) -> CospanMorphism:
    """Each strand becomes one apex element; each circle a floating one."""
    owner = {}
    for idx, (p, q) in enumerate(f.pairs(), 1):
        owner[p] = owner[q] = idx
    strands = len(f.pairs())
    left = tuple(owner[p] for p in range(1, f.dom + 1))
    right = tuple(owner[p] for p in range(f.dom + 1, f.dom + f.cod + 1))
    return _canonical(f.dom, f.cod, strands + f.circles, left, right)


__all__ = [
    "CobMorphism", "CobProp", "cob_compose", "cob_identity", "cob_of_permutation",
    "cob_sum", "cob_to_cospan", "perfect_matchings",
]
