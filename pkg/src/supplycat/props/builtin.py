"""Props built from finite functions: bijections, functions, injections,
their opposites, and the involution prop."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..finset import (
    CompositionError, FinFunction, Permutation, as_permutation, block_braiding, compose_fn,
    enumerate_functions, enumerate_permutations, identity_fn, tensor_fn,
)
from . import presentations
from .base import Prop, function_term, permutation_term
from .terms import Compose, Id, PropTerm, Sum, dual_term


class Bijections(Prop):
    """The initial prop: ``hom(m, n)`` is the set of bijections."""

    name = "B"

    def __init__(self):
        self.presentation = presentations.symmetries()

    def identity(self, n):
        return identity_fn(n)

    def compose(self, f, g):
        return compose_fn(f, g)

    def monoidal_sum(self, f, g):
        return tensor_fn(f, g)

    def braiding(self, m, n):
        return block_braiding(m, n)

    def permutation(self, perm):
        return perm

    def enumerate_hom(self, m, n, bound=None):
        return enumerate_permutations(m) if m == n else []

    def decompose(self, f):
        return permutation_term(as_permutation(f))


class FinSetProp(Prop):
    """The skeleton of FinSet, presented by the commutative monoid."""

    name = "FinSet"

    def __init__(self):
        self.presentation = presentations.monoid()

    def identity(self, n):
        return identity_fn(n)

    def compose(self, f, g):
        return compose_fn(f, g)

    def monoidal_sum(self, f, g):
        return tensor_fn(f, g)

    def braiding(self, m, n):
        return block_braiding(m, n)

    def permutation(self, perm):
        return perm

    def enumerate_hom(self, m, n, bound=None):
        return enumerate_functions(m, n)

    def generator(self, name):
        return {"mu": FinFunction(2, 1, (1, 1)), "eta": FinFunction(0, 1, ())}[name]

    def decompose(self, f):
        gens = self.presentation.generators
        return function_term(f, gens["mu"], gens["eta"])


class Injections(FinSetProp):
    """Injective functions; freely generated by a single point ``eta: 0 -> 1``."""

    name = "Inj"

    def __init__(self):
        self.presentation = presentations.pointed()

    def enumerate_hom(self, m, n, bound=None):
        return [f for f in enumerate_functions(m, n) if f.is_injective()]

    def generator(self, name):
        return {"eta": FinFunction(0, 1, ())}[name]

    def decompose(self, f):
        if not f.is_injective():
            raise ValueError(f"{f!r} is not injective")
        eta = self.presentation.generators["eta"]
        missing = [j for j in range(1, f.cod + 1) if j not in f.table]
        perm = Permutation(f.table + tuple(missing))
        term: PropTerm = Id(f.dom)
        for _ in missing:
            term = Sum(term, eta)
        if perm == identity_fn(f.cod):
            return term
        return Compose(term, permutation_term(perm))


@dataclass(frozen=True)
class OpMorphism:
    """A morphism ``m -> n`` of an opposite prop, stored as ``n -> m`` below."""

    arrow: object

    @property
    def dom(self):
        return self.arrow.cod

    @property
    def cod(self):
        return self.arrow.dom

    def __str__(self):
        return f"op[{self.arrow}]"


class OpProp(Prop):
    """The formal dual of a prop, with generators renamed by ``rename``."""

    def __init__(self, base: Prop, rename: dict[str, str], presentation=None, name=None):
        self.base = base
        self.rename = dict(rename)
        self.unrename = {v: k for k, v in rename.items()}
        self.name = name or f"{base.name}^op"
        self.presentation = presentation

    def identity(self, n):
        return OpMorphism(self.base.identity(n))

    def compose(self, f, g):
        if f.cod != g.dom:
            raise CompositionError(f"cannot compose {f.dom}->{f.cod} with {g.dom}->{g.cod}")
        return OpMorphism(self.base.compose(g.arrow, f.arrow))

    def monoidal_sum(self, f, g):
        return OpMorphism(self.base.monoidal_sum(f.arrow, g.arrow))

    def braiding(self, m, n):
        return OpMorphism(self.base.braiding(n, m))

    def permutation(self, perm):
        return OpMorphism(self.base.permutation(perm.inverse()))

    def equal(self, f, g):
        return self.base.equal(f.arrow, g.arrow)

    def enumerate_hom(self, m, n, bound=None):
        return [OpMorphism(f) for f in self.base.enumerate_hom(n, m, bound)]

    def can_enumerate(self):
        return self.base.can_enumerate()

    def generator(self, name):
        return OpMorphism(self.base.generator(self.unrename.get(name, name)))

    def decompose(self, f):
        return dual_term(self.base.decompose(f.arrow), self.rename)

    def render(self, f):
        return f"op[{self.base.render(f.arrow)}]"


def finset_op() -> OpProp:
    """Commutative comonoids: the opposite of FinSet."""
    return OpProp(FinSetProp(), {"mu": "delta", "eta": "epsilon"},
                  presentations.comonoid(), name="FinSet^op")


def injections_op() -> OpProp:
    return OpProp(Injections(), {"eta": "epsilon"}, presentations.copointed(), name="Inj^op")


@dataclass(frozen=True)
class InvolutionMorphism:
    """``flags`` mark the wires carrying the involution, applied before ``perm``."""

    perm: Permutation
    flags: tuple[bool, ...]

    def __post_init__(self):
        if len(self.flags) != self.perm.size:
            raise ValueError("one flag per wire")

    @property
    def dom(self):
        return self.perm.size

    @property
    def cod(self):
        return self.perm.size

    def __str__(self):
        marks = "".join("i" if b else "." for b in self.flags)
        return f"[{marks}]{self.perm.table}"


def involution_on(m: int) -> InvolutionMorphism:
    """The distinguished involution ``i_m``."""
    return InvolutionMorphism(identity_fn(m), (True,) * m)


class Involutions(Prop):
    """Permutations with a Z/2 label per wire (the wreath product completion).

    ``i_m`` is the identity permutation with every wire flagged.
    """

    name = "Inv"

    def __init__(self):
        self.presentation = presentations.involution()

    def identity(self, n):
        return InvolutionMorphism(identity_fn(n), (False,) * n)

    def compose(self, f, g):
        if f.cod != g.dom:
            raise CompositionError(f"cannot compose {f.dom}->{f.cod} with {g.dom}->{g.cod}")
        flags = tuple(a != g.flags[f.perm(i) - 1] for i, a in enumerate(f.flags, 1))
        return InvolutionMorphism(compose_fn(f.perm, g.perm), flags)

    def monoidal_sum(self, f, g):
        return InvolutionMorphism(tensor_fn(f.perm, g.perm), f.flags + g.flags)

    def braiding(self, m, n):
        return InvolutionMorphism(block_braiding(m, n), (False,) * (m + n))

    def permutation(self, perm):
        return InvolutionMorphism(perm, (False,) * perm.size)

    def enumerate_hom(self, m, n, bound=None):
        if m != n:
            return []
        return [InvolutionMorphism(p, flags)
                for p in enumerate_permutations(m)
                for flags in itertools.product((False, True), repeat=m)]

    def generator(self, name):
        return {"i": involution_on(1)}[name]

    def decompose(self, f):
        i = self.presentation.generators["i"]
        wires = [i if b else Id(1) for b in f.flags]
        term: PropTerm = Id(0) if not wires else wires[0]
        for w in wires[1:]:
            term = Sum(term, w)
        if f.perm == identity_fn(f.dom):
            return term
        return Compose(term, permutation_term(f.perm))
