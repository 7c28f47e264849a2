"""Strong monoidal functors and their invariant checks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from ..finset import Permutation
from ..report import CheckReport
from ..smc.base import SMC, Leaf, Tensor
from ..smc.coherence import canonical_iso
from ..smc.rel import (
    FinSetCat, NestedRel, Rel, flatten_relation, function_as_relation, nest_relation,
)
from ..smc.terminal import POINT, Terminal


@dataclass(eq=False)
class StrongMonoidalFunctor:
    """``F: source -> target`` with strongators.

    ``strongator(a, b)`` is ``F(a) x F(b) -> F(a x b)`` and ``unit_strongator``
    is ``I -> F(I)``; both come with inverses.  ``strict`` declares that every
    strongator is an identity, which ``check_functor`` verifies.
    """

    source: SMC
    target: SMC
    on_objects: Callable[[Any], Any]
    on_morphisms: Callable[[Any], Any]
    strongator: Callable[[Any, Any], Any]
    strongator_inv: Callable[[Any, Any], Any]
    unit_strongator: Any
    unit_strongator_inv: Any
    name: str = "F"
    strict: bool = False

    def obj(self, a):
        return self.on_objects(a)

    def __call__(self, f):
        return self.on_morphisms(f)

    def phi(self, a, b):
        return self.strongator(a, b)

    def phi_power(self, c, m: int):
        """``F(c)^m -> F(c^m)`` along left-nesting: the canonical composite of strongators."""
        D, C = self.target, self.source
        if m == 0:
            return self.unit_strongator
        out = D.identity(self.obj(c))
        for k in range(2, m + 1):
            out = D.compose(D.tensor(out, D.identity(self.obj(c))),
                            self.strongator(C.power(c, k - 1), c))
        return out

    def phi_power_inv(self, c, m: int):
        D, C = self.target, self.source
        if m == 0:
            return self.unit_strongator_inv
        out = D.identity(self.obj(c))
        for k in range(2, m + 1):
            out = D.compose(self.strongator_inv(C.power(c, k - 1), c),
                            D.tensor(out, D.identity(self.obj(c))))
        return out

    def __repr__(self):
        return f"{self.name}: {self.source.name} -> {self.target.name}"


def strict_functor(source: SMC, target: SMC, on_objects, on_morphisms, name: str
                   ) -> StrongMonoidalFunctor:
    """A functor that preserves tensor and unit on the nose."""
    D = target

    def phi(a, b):
        return D.identity(D.tensor_obj(on_objects(a), on_objects(b)))

    unit = D.identity(D.unit)
    return StrongMonoidalFunctor(source, target, on_objects, on_morphisms, phi, phi,
                                 unit, unit, name, strict=True)


def identity_functor(C: SMC) -> StrongMonoidalFunctor:
    return strict_functor(C, C, lambda a: a, lambda f: f, f"id[{C.name}]")


def compose_functors(F: StrongMonoidalFunctor, G: StrongMonoidalFunctor) -> StrongMonoidalFunctor:
    """``F`` then ``G``; strongators ``G(F a) x G(F b) -> G(F a x F b) -> G(F(a x b))``."""
    if F.target is not G.source:
        raise ValueError(f"cannot compose {F} with {G}")
    E = G.target

    def phi(a, b):
        return E.compose(G.phi(F.obj(a), F.obj(b)), G(F.phi(a, b)))

    def phi_inv(a, b):
        return E.compose(G(F.strongator_inv(a, b)), G.strongator_inv(F.obj(a), F.obj(b)))

    return StrongMonoidalFunctor(
        F.source, E, lambda a: G.obj(F.obj(a)), lambda f: G(F(f)), phi, phi_inv,
        E.compose(G.unit_strongator, G(F.unit_strongator)),
        E.compose(G(F.unit_strongator_inv), G.unit_strongator_inv),
        f"{F.name};{G.name}", strict=F.strict and G.strict)


def inclusion_functor(source: FinSetCat | None = None, target: Rel | None = None):
    """Functions as relations: bijective on objects and strict."""
    source, target = source or FinSetCat(), target or Rel()
    return strict_functor(source, target, lambda a: a, function_as_relation, "incl")


def flattening_functor(source: NestedRel | None = None, target: Rel | None = None):
    """Sets of nested pairs to boolean matrices over row-major indices."""
    source, target = source or NestedRel(), target or Rel()
    return strict_functor(source, target, lambda a: a, flatten_relation, "flatten")


def nesting_functor(source: Rel | None = None, target: NestedRel | None = None):
    """The inverse of flattening; useful as the section of a strict surjection."""
    source, target = source or Rel(), target or NestedRel()
    return strict_functor(source, target, lambda a: a, nest_relation, "nest")


def to_terminal(C: SMC, T: Terminal | None = None) -> StrongMonoidalFunctor:
    T = T or Terminal()
    return strict_functor(C, T, lambda a: T.unit, lambda f: POINT, f"!{C.name}")


def from_terminal(C: SMC, T: Terminal | None = None) -> StrongMonoidalFunctor:
    """The unit functor ``* -> I``; strongators are unitors of the unit."""
    T = T or Terminal()
    I = C.unit
    return StrongMonoidalFunctor(
        T, C, lambda a: I, lambda f: C.identity(I),
        lambda a, b: C.left_unitor(I), lambda a, b: C.left_unitor_inv(I),
        C.identity(I), C.identity(I), f"I[{C.name}]")


def constant_unit_functor(C: SMC, D: SMC) -> StrongMonoidalFunctor:
    I = D.unit
    return StrongMonoidalFunctor(
        C, D, lambda a: I, lambda f: D.identity(I),
        lambda a, b: D.left_unitor(I), lambda a, b: D.left_unitor_inv(I),
        D.identity(I), D.identity(I), f"const-I[{D.name}]")


def middle_four(X: SMC, a1, b1, a2, b2):
    """``(a1 x b1) x (a2 x b2) -> (a1 x a2) x (b1 x b2)``, the canonical interchange."""
    w = [Leaf(a1), Leaf(b1), Leaf(a2), Leaf(b2)]
    src = Tensor(Tensor(w[0], w[1]), Tensor(w[2], w[3]))
    tgt = Tensor(Tensor(w[0], w[2]), Tensor(w[1], w[3]))
    return canonical_iso(X, src, tgt, Permutation([1, 3, 2, 4]))


def middle_four_inv(X: SMC, a1, a2, b1, b2):
    """Inverse of ``middle_four(X, a1, b1, a2, b2)``."""
    w = [Leaf(a1), Leaf(a2), Leaf(b1), Leaf(b2)]
    src = Tensor(Tensor(w[0], w[1]), Tensor(w[2], w[3]))
    tgt = Tensor(Tensor(w[0], w[2]), Tensor(w[1], w[3]))
    return canonical_iso(X, src, tgt, Permutation([1, 3, 2, 4]))


def smf_tensor(F: StrongMonoidalFunctor, G: StrongMonoidalFunctor) -> StrongMonoidalFunctor:
    """The pointwise tensor ``(F x G)(c) = F(c) x G(c)``, with interchange strongators."""
    if F.source is not G.source or F.target is not G.target:
        raise ValueError(f"{F} and {G} do not share source and target")
    D = F.target

    def obj(c):
        return D.tensor_obj(F.obj(c), G.obj(c))

    def phi(a, b):
        return D.compose(middle_four(D, F.obj(a), G.obj(a), F.obj(b), G.obj(b)),
                         D.tensor(F.phi(a, b), G.phi(a, b)))

    def phi_inv(a, b):
        return D.compose(D.tensor(F.strongator_inv(a, b), G.strongator_inv(a, b)),
                         middle_four_inv(D, F.obj(a), F.obj(b), G.obj(a), G.obj(b)))

    I = D.unit
    unit = D.compose(D.left_unitor_inv(I), D.tensor(F.unit_strongator, G.unit_strongator))
    unit_inv = D.compose(D.tensor(F.unit_strongator_inv, G.unit_strongator_inv), D.left_unitor(I))
    return StrongMonoidalFunctor(F.source, D, obj, lambda f: D.tensor(F(f), G(f)), phi, phi_inv,
                                 unit, unit_inv, f"({F.name} x {G.name})")


# -- checks ----------------------------------------------------------------------------

def morphism_sample(C: SMC, objects: Sequence) -> list:
    return [f for a in objects for b in objects for f in C.enumerate_hom(a, b)]


def check_functor(F: StrongMonoidalFunctor, objects: Sequence, morphisms: Sequence | None = None,
                  pair_limit: int = 20_000) -> CheckReport:
    """Functoriality, naturality and coherence of the strongators, on a sample.

    Naturality is checked on pairs from ``morphisms`` (default: everything
    ``enumerate_hom`` gives between ``objects``), up to ``pair_limit`` pairs
    taken in enumeration order.
    """
    C, D = F.source, F.target
    morphisms = list(morphism_sample(C, objects) if morphisms is None else morphisms)
    report = CheckReport(f"functor/{F.name}", {"objects": len(objects), "morphisms": len(morphisms)})
    I = C.unit

    def eq(lhs, rhs, **ctx):
        if D.equal(lhs, rhs):
            return None
        return {**{k: str(v) for k, v in ctx.items()}, "lhs": D.render(lhs), "rhs": D.render(rhs)}

    def first(items, test):
        for item in items:
            w = test(*item)
            if w is not None:
                return w
        return None

    def typed(f):
        got = (D.dom(F(f)), D.cod(F(f)))
        want = (F.obj(C.dom(f)), F.obj(C.cod(f)))
        return None if got == want else {"f": C.render(f), "got": str(got), "expected": str(want)}

    def identities(a):
        return eq(F(C.identity(a)), D.identity(F.obj(a)), a=a)

    def composition(f, g):
        return eq(F(C.compose(f, g)), D.compose(F(f), F(g)), f=C.render(f), g=C.render(g))

    def naturality(f, g):
        lhs = D.compose(F.phi(C.dom(f), C.dom(g)), F(C.tensor(f, g)))
        rhs = D.compose(D.tensor(F(f), F(g)), F.phi(C.cod(f), C.cod(g)))
        return eq(lhs, rhs, f=C.render(f), g=C.render(g))

    def associativity(a, b, c):
        Fa, Fb, Fc = F.obj(a), F.obj(b), F.obj(c)
        lhs = D.compose_all(D.tensor(F.phi(a, b), D.identity(Fc)), F.phi(C.tensor_obj(a, b), c),
                            F(C.associator(a, b, c)))
        rhs = D.compose_all(D.associator(Fa, Fb, Fc), D.tensor(D.identity(Fa), F.phi(b, c)),
                            F.phi(a, C.tensor_obj(b, c)))
        return eq(lhs, rhs, a=a, b=b, c=c)

    def unitality(a):
        Fa = F.obj(a)
        left = D.compose_all(D.tensor(F.unit_strongator, D.identity(Fa)), F.phi(I, a),
                             F(C.left_unitor(a)))
        right = D.compose_all(D.tensor(D.identity(Fa), F.unit_strongator), F.phi(a, I),
                              F(C.right_unitor(a)))
        return eq(left, D.left_unitor(Fa), a=a) or eq(right, D.right_unitor(Fa), a=a)

    def symmetry(a, b):
        lhs = D.compose(F.phi(a, b), F(C.braiding(a, b)))
        rhs = D.compose(D.braiding(F.obj(a), F.obj(b)), F.phi(b, a))
        return eq(lhs, rhs, a=a, b=b)

    def invertible(a, b):
        ab = D.tensor_obj(F.obj(a), F.obj(b))
        return (eq(D.compose(F.phi(a, b), F.strongator_inv(a, b)), D.identity(ab), a=a, b=b)
                or eq(D.compose(F.strongator_inv(a, b), F.phi(a, b)),
                      D.identity(F.obj(C.tensor_obj(a, b))), a=a, b=b))

    def unit_invertible():
        return (eq(D.compose(F.unit_strongator, F.unit_strongator_inv), D.identity(D.unit))
                or eq(D.compose(F.unit_strongator_inv, F.unit_strongator), D.identity(F.obj(I))))

    def strictness(a, b):
        if D.tensor_obj(F.obj(a), F.obj(b)) != F.obj(C.tensor_obj(a, b)):
            return {"a": str(a), "b": str(b), "reason": "F(a) x F(b) differs from F(a x b)"}
        return eq(F.phi(a, b), D.identity(F.obj(C.tensor_obj(a, b))), a=a, b=b)

    by_dom: dict = {}
    for g in morphisms:
        by_dom.setdefault(C.dom(g), []).append(g)
    composable = list(itertools.islice(
        ((f, g) for f in morphisms for g in by_dom.get(C.cod(f), ())), pair_limit))
    pairs = list(itertools.islice(itertools.product(morphisms, repeat=2), pair_limit))
    checks = [
        ("typed", "images have the mapped domain and codomain", [(f,) for f in morphisms], typed),
        ("identities", "identities are preserved", [(a,) for a in objects], identities),
        ("composition", "composition is preserved", composable, composition),
        ("strongator/naturality", "strongators are natural", pairs, naturality),
        ("strongator/associativity", "strongators are compatible with associators",
         itertools.product(objects, repeat=3), associativity),
        ("strongator/unit", "strongators are compatible with unitors", [(a,) for a in objects],
         unitality),
        ("strongator/symmetry", "strongators are compatible with braidings",
         itertools.product(objects, repeat=2), symmetry),
        ("strongator/invertible", "strongators are invertible",
         itertools.product(objects, repeat=2), invertible),
        ("strongator/unit-invertible", "the unit strongator is invertible", [()], unit_invertible),
    ]
    if F.strict:
        checks.append(("strict", "declared strict: strongators are identities",
                       itertools.product(objects, repeat=2), strictness))
    for cid, anchor, items, test in checks:
        w = first(items, test)
        report.add(cid, anchor, w is None, w)
    return report.sorted()
