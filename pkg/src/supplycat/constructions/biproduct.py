"""The biproduct of symmetric monoidal categories, with its universal functors."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Any, Sequence

from ..report import CheckReport
from ..smc.base import SMC
from ..supply import Supply
from .functors import StrongMonoidalFunctor, middle_four, middle_four_inv, strict_functor


@dataclass(frozen=True)
class PairMorphism:
    first: Any
    second: Any
    dom: tuple
    cod: tuple

    def __str__(self):
        return f"<{self.first} | {self.second}>"


class BiproductSMC(SMC):
    """``C (+) D``: pairs of objects and pairs of morphisms, all structure pointwise."""

    def __init__(self, left: SMC, right: SMC):
        self.left, self.right = left, right
        self.name = f"({left.name}+{right.name})"
        self.unit = (left.unit, right.unit)

    def pair(self, f, g) -> PairMorphism:
        L, R = self.left, self.right
        return PairMorphism(f, g, (L.dom(f), R.dom(g)), (L.cod(f), R.cod(g)))

    def tensor_obj(self, a, b):
        return (self.left.tensor_obj(a[0], b[0]), self.right.tensor_obj(a[1], b[1]))

    def atom(self, label):
        if isinstance(label, tuple) and len(label) == 2:
            return label
        raise ValueError(f"{label!r} is not an object of {self.name}")

    def identity(self, a):
        return self.pair(self.left.identity(a[0]), self.right.identity(a[1]))

    def compose(self, f, g):
        return self.pair(self.left.compose(f.first, g.first), self.right.compose(f.second, g.second))

    def tensor(self, f, g):
        return self.pair(self.left.tensor(f.first, g.first), self.right.tensor(f.second, g.second))

    def equal(self, f, g):
        return self.left.equal(f.first, g.first) and self.right.equal(f.second, g.second)

    def is_identity_like(self, f):
        return self.left.is_identity_like(f.first) and self.right.is_identity_like(f.second)

    def _pointwise(self, op, *objs):
        return self.pair(getattr(self.left, op)(*(o[0] for o in objs)),
                         getattr(self.right, op)(*(o[1] for o in objs)))

    @lru_cache(maxsize=None)
    def associator(self, a, b, c):
        return self._pointwise("associator", a, b, c)

    @lru_cache(maxsize=None)
    def associator_inv(self, a, b, c):
        return self._pointwise("associator_inv", a, b, c)

    @lru_cache(maxsize=None)
    def left_unitor(self, a):
        return self._pointwise("left_unitor", a)

    @lru_cache(maxsize=None)
    def left_unitor_inv(self, a):
        return self._pointwise("left_unitor_inv", a)

    @lru_cache(maxsize=None)
    def right_unitor(self, a):
        return self._pointwise("right_unitor", a)

    @lru_cache(maxsize=None)
    def right_unitor_inv(self, a):
        return self._pointwise("right_unitor_inv", a)

    @lru_cache(maxsize=None)
    def braiding(self, a, b):
        return self._pointwise("braiding", a, b)

    def enumerate_hom(self, a, b):
        return [self.pair(f, g) for f in self.left.enumerate_hom(a[0], b[0])
                for g in self.right.enumerate_hom(a[1], b[1])]

    def sample_objects(self, max_leaf, max_depth):
        return [(x, y) for x in self.left.sample_objects(max_leaf, max_depth)
                for y in self.right.sample_objects(max_leaf, max_depth)]

    def render(self, f):
        return f"left: {self.left.render(f.first)}\nright: {self.right.render(f.second)}"

    def render_object(self, a):
        return f"({self.left.render_object(a[0])}, {self.right.render_object(a[1])})"


def biproduct(C: SMC, D: SMC) -> BiproductSMC:
    return BiproductSMC(C, D)


def biproduct_all(categories: Sequence[SMC]) -> SMC:
    """Iterated binary biproducts, nested to the left.

    Over a finite index set every object has finitely many non-unit
    components, so no restriction on objects is needed.
    """
    if not categories:
        raise ValueError("need at least one category")
    return reduce(BiproductSMC, categories)


# -- universal functors -----------------------------------------------------------------

def projection(B: BiproductSMC, which: int) -> StrongMonoidalFunctor:
    """``pi_0`` or ``pi_1``; strict."""
    target = B.left if which == 0 else B.right
    pick = (lambda f: f.first) if which == 0 else (lambda f: f.second)
    return strict_functor(B, target, lambda a: a[which], pick, f"pi{which}")


def coprojection(B: BiproductSMC, which: int) -> StrongMonoidalFunctor:
    """``c -> (c, I)`` (or ``(I, c)``); the strongators are identities paired with ``lambda_I``."""
    src = B.left if which == 0 else B.right
    other = B.right if which == 0 else B.left
    J = other.unit

    def put(x, y):
        return (x, y) if which == 0 else (y, x)

    def mor(x, y):
        return B.pair(x, y) if which == 0 else B.pair(y, x)

    def phi(a, b):
        return mor(src.identity(src.tensor_obj(a, b)), other.left_unitor(J))

    def phi_inv(a, b):
        return mor(src.identity(src.tensor_obj(a, b)), other.left_unitor_inv(J))

    unit = mor(src.identity(src.unit), other.identity(J))
    return StrongMonoidalFunctor(src, B, lambda a: put(a, J), lambda f: mor(f, other.identity(J)),
                                 phi, phi_inv, unit, unit, f"iota{which}")


def pairing(F: StrongMonoidalFunctor, G: StrongMonoidalFunctor, B: BiproductSMC | None = None
            ) -> StrongMonoidalFunctor:
    """``<F, G>: X -> C (+) D`` with pointwise strongators."""
    if F.source is not G.source:
        raise ValueError(f"{F} and {G} have different sources")
    B = B or BiproductSMC(F.target, G.target)
    return StrongMonoidalFunctor(
        F.source, B, lambda x: (F.obj(x), G.obj(x)), lambda f: B.pair(F(f), G(f)),
        lambda a, b: B.pair(F.phi(a, b), G.phi(a, b)),
        lambda a, b: B.pair(F.strongator_inv(a, b), G.strongator_inv(a, b)),
        B.pair(F.unit_strongator, G.unit_strongator),
        B.pair(F.unit_strongator_inv, G.unit_strongator_inv),
        f"<{F.name},{G.name}>", strict=F.strict and G.strict)


def copairing(F: StrongMonoidalFunctor, G: StrongMonoidalFunctor, B: BiproductSMC | None = None
              ) -> StrongMonoidalFunctor:
    """``[F, G](c, d) = F(c) x G(d)``; strongators interchange the middle factors."""
    if F.target is not G.target:
        raise ValueError(f"{F} and {G} have different targets")
    E = F.target
    B = B or BiproductSMC(F.source, G.source)

    def obj(a):
        return E.tensor_obj(F.obj(a[0]), G.obj(a[1]))

    def phi(a, b):
        return E.compose(middle_four(E, F.obj(a[0]), G.obj(a[1]), F.obj(b[0]), G.obj(b[1])),
                         E.tensor(F.phi(a[0], b[0]), G.phi(a[1], b[1])))

    def phi_inv(a, b):
        return E.compose(E.tensor(F.strongator_inv(a[0], b[0]), G.strongator_inv(a[1], b[1])),
                         middle_four_inv(E, F.obj(a[0]), F.obj(b[0]), G.obj(a[1]), G.obj(b[1])))

    I = E.unit
    unit = E.compose(E.left_unitor_inv(I), E.tensor(F.unit_strongator, G.unit_strongator))
    unit_inv = E.compose(E.tensor(F.unit_strongator_inv, G.unit_strongator_inv), E.left_unitor(I))
    return StrongMonoidalFunctor(B, E, obj, lambda f: E.tensor(F(f.first), G(f.second)),
                                 phi, phi_inv, unit, unit_inv, f"[{F.name},{G.name}]")


def biproduct_supply(sC: Supply, sD: Supply, B: BiproductSMC | None = None) -> Supply:
    """Pointwise: powers in the biproduct are pairs of powers, so no conjugation is needed."""
    if sC.prop is not sD.prop and sC.prop.name != sD.prop.name:
        raise ValueError(f"{sC} and {sD} supply different props")
    B = B or BiproductSMC(sC.category, sD.category)

    def evaluator(c, mu):
        return B.pair(sC.action(c[0], mu), sD.action(c[1], mu))

    return Supply(sC.prop, B, evaluator, f"({sC.label}+{sD.label})")


# -- universal properties on samples ----------------------------------------------------

def check_biproduct(B: BiproductSMC, objects: Sequence, F: StrongMonoidalFunctor,
                    G: StrongMonoidalFunctor, pair_objects: Sequence,
                    H: StrongMonoidalFunctor | None = None,
                    K: StrongMonoidalFunctor | None = None) -> CheckReport:
    """Unit, strict projections, pairing and copairing identities on samples.

    ``F: X -> B.left`` and ``G: X -> B.right`` share a source sampled by
    ``objects``; ``pair_objects`` samples ``B`` itself.  When ``H: B.left -> E``
    and ``K: B.right -> E`` are given, their copairing is checked too.
    """
    report = CheckReport(f"biproduct/{B.name}", {"objects": len(objects),
                                                 "pair_objects": len(pair_objects)})
    X = F.source
    xs_morphisms = [f for a in objects for b in objects for f in X.enumerate_hom(a, b)]

    report.add("unit", "the unit is the pair of units", B.unit == (B.left.unit, B.right.unit),
               None if B.unit == (B.left.unit, B.right.unit) else {"unit": str(B.unit)})

    def strict_projection(which):
        P = projection(B, which)
        T = P.target
        for a in pair_objects:
            for b in pair_objects:
                if not T.equal(P.phi(a, b), T.identity(P.obj(B.tensor_obj(a, b)))):
                    return {"projection": P.name, "a": B.render_object(a), "b": B.render_object(b)}
        if not T.equal(P.unit_strongator, T.identity(T.unit)):
            return {"projection": P.name, "unit": T.render(P.unit_strongator)}
        return None

    for which in (0, 1):
        w = strict_projection(which)
        report.add(f"projection{which}/strict", "projections have identity strongators", w is None, w)

    pair = pairing(F, G, B)

    def pairing_projects(which, H):
        P = projection(B, which)
        T = H.target
        for a in objects:
            if P.obj(pair.obj(a)) != H.obj(a):
                return {"object": X.render_object(a)}
            for b in objects:
                lhs = P(pair.phi(a, b))
                if not T.equal(lhs, H.phi(a, b)):
                    return {"a": X.render_object(a), "b": X.render_object(b),
                            "lhs": T.render(lhs), "rhs": T.render(H.phi(a, b))}
        for f in xs_morphisms:
            if not T.equal(P(pair(f)), H(f)):
                return {"f": X.render(f)}
        return None

    for which, H in ((0, F), (1, G)):
        w = pairing_projects(which, H)
        report.add(f"pairing/pi{which}", "pairing then projection is the component, strictly",
                   w is None, w)

    if H is not None and K is not None:
        cop = copairing(H, K, B)
        E = cop.target
        w = None
        for a in pair_objects:
            if cop.obj(a) != E.tensor_obj(H.obj(a[0]), K.obj(a[1])):
                w = {"object": B.render_object(a), "got": str(cop.obj(a))}
                break
        report.add("copairing/objects", "copairing sends (c, d) to F(c) x G(d)", w is None, w)
        for which in (0, 1):
            w = _copairing_restricts(B, cop, H, K, which, [a[which] for a in pair_objects])
            report.add(f"copairing/iota{which}", "copairing after a coprojection is isomorphic "
                       "to the component through unitors", w is None, w)
    return report.sorted()


def _copairing_restricts(B: BiproductSMC, cop, H, K, which: int, objects):
    """``[H, K](iota0 c) = H(c) x K(I)`` compares to ``H(c)`` by the inverse unit
    strongator of ``K`` then the right unitor (symmetrically for ``iota1``);
    check the comparison is a natural isomorphism."""
    E = cop.target
    src = B.left if which == 0 else B.right
    comp = H if which == 0 else K
    iota = coprojection(B, which)
    objects = list(dict.fromkeys(objects))

    def theta(c):
        if which == 0:
            return E.compose(E.tensor(E.identity(H.obj(c)), K.unit_strongator_inv),
                             E.right_unitor(H.obj(c)))
        return E.compose(E.tensor(H.unit_strongator_inv, E.identity(K.obj(c))),
                         E.left_unitor(K.obj(c)))

    def theta_inv(c):
        if which == 0:
            return E.compose(E.right_unitor_inv(H.obj(c)),
                             E.tensor(E.identity(H.obj(c)), K.unit_strongator))
        return E.compose(E.left_unitor_inv(K.obj(c)),
                         E.tensor(H.unit_strongator, E.identity(K.obj(c))))

    for c in objects:
        there = cop.obj(iota.obj(c))
        if not (E.equal(E.compose(theta(c), theta_inv(c)), E.identity(there))
                and E.equal(E.compose(theta_inv(c), theta(c)), E.identity(comp.obj(c)))):
            return {"object": src.render_object(c), "reason": "comparison is not invertible"}
        for d in objects:
            for f in src.enumerate_hom(c, d):
                lhs = E.compose(cop(iota(f)), theta(d))
                rhs = E.compose(theta(c), comp(f))
                if not E.equal(lhs, rhs):
                    return {"f": src.render(f), "lhs": E.render(lhs), "rhs": E.render(rhs)}
    return None
