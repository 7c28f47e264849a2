"""Strictification: lists of objects, with hom-sets borrowed through the left-nested product."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from ..finset import block_braiding, grid_transpose
from ..report import CheckReport
from ..smc.base import SMC, Leaf, Tensor, tensor_all
from ..smc.coherence import canonical_iso
from ..supply import Supply
from .functors import StrongMonoidalFunctor


@dataclass(frozen=True)
class StrictMorphism:
    """A morphism ``dom -> cod`` of lists, stored as ``arrow: (x)dom -> (x)cod`` in the base."""

    dom: tuple
    cod: tuple
    arrow: Any


def list_word(objs: tuple):
    """The left-nested word over ``objs``; the empty list gives the unit."""
    return tensor_all(Leaf(x) for x in objs)


def pair_word(a: tuple, b: tuple):
    return Tensor(list_word(tuple(a)), list_word(tuple(b)))


class StrictCategory(SMC):
    """Objects are tuples of base objects; tensor is concatenation and the unit is ``()``.

    Associators and unitors are identities.  The tensor of morphisms is
    conjugated by the canonical isomorphisms relating nested products of
    the parts to the nested product of the concatenation.
    """

    unit = ()

    def __init__(self, base: SMC):
        self.base = base
        self.name = f"{base.name}^str"

    @lru_cache(maxsize=None)
    def ev(self, objs: tuple):
        """``(x)[a, b, c] = (a x b) x c`` in the base, with ``(x)[] = I``."""
        return self.base.eval_word(list_word(objs))

    def tensor_obj(self, a, b):
        return tuple(a) + tuple(b)

    def atom(self, label):
        if isinstance(label, tuple):
            return label
        raise ValueError(f"{label!r} is not a list object")

    def lift(self, dom, cod, arrow) -> StrictMorphism:
        """``arrow`` between the nested products, viewed between the lists."""
        B = self.base
        if (B.dom(arrow), B.cod(arrow)) != (self.ev(dom), self.ev(cod)):
            raise ValueError(f"arrow does not run from (x){list(dom)} to (x){list(cod)}")
        return StrictMorphism(tuple(dom), tuple(cod), arrow)

    @lru_cache(maxsize=None)
    def merge(self, a, b):
        """``(x)a x (x)b -> (x)(a + b)`` in the base."""
        return canonical_iso(self.base, pair_word(a, b), list_word(tuple(a) + tuple(b)))

    @lru_cache(maxsize=None)
    def split(self, a, b):
        return canonical_iso(self.base, list_word(tuple(a) + tuple(b)), pair_word(a, b))

    def permute(self, dom: tuple, perm) -> StrictMorphism:
        """The canonical isomorphism moving list entry ``i`` to position ``perm(i)``."""
        cod = [None] * len(dom)
        for i, x in enumerate(dom, 1):
            cod[perm(i) - 1] = x
        cod = tuple(cod)
        return StrictMorphism(dom, cod, canonical_iso(self.base, list_word(dom), list_word(cod), perm))

    @lru_cache(maxsize=None)
    def identity(self, a):
        return StrictMorphism(a, a, self.base.identity(self.ev(a)))

    def compose(self, f, g):
        if f.cod != g.dom:
            raise ValueError(f"cannot compose {list(f.cod)} with {list(g.dom)}")
        return StrictMorphism(f.dom, g.cod, self.base.compose(f.arrow, g.arrow))

    def tensor(self, f, g):
        B = self.base
        arrow = B.compose_all(self.split(f.dom, g.dom), B.tensor(f.arrow, g.arrow),
                              self.merge(f.cod, g.cod))
        return StrictMorphism(f.dom + g.dom, f.cod + g.cod, arrow)

    def equal(self, f, g):
        return f.dom == g.dom and f.cod == g.cod and self.base.equal(f.arrow, g.arrow)

    def is_identity_like(self, f):
        return f.dom == f.cod and self.base.is_identity_like(f.arrow)

    def associator(self, a, b, c):
        return self.identity(a + b + c)

    associator_inv = associator

    def left_unitor(self, a):
        return self.identity(a)

    left_unitor_inv = right_unitor = right_unitor_inv = left_unitor

    def braiding(self, a, b):
        return self.permute(a + b, block_braiding(len(a), len(b)))

    def enumerate_hom(self, a, b):
        return [StrictMorphism(a, b, f) for f in self.base.enumerate_hom(self.ev(a), self.ev(b))]

    def sample_objects(self, max_leaf, max_depth):
        """Lists of base atoms with at most ``2**max_depth`` entries, as many as a tree has leaves."""
        atoms = self.base.sample_objects(max_leaf, 0)
        out = []
        for n in range(2 ** max_depth + 1):
            out += list(itertools.product(atoms, repeat=n))
        return out

    def render(self, f):
        return f"{self.render_object(f.dom)} -> {self.render_object(f.cod)} via {self.base.render(f.arrow)}"

    def render_object(self, a):
        return "[" + ", ".join(self.base.render_object(x) for x in a) + "]"


@dataclass
class StrictificationResult:
    category: StrictCategory
    tensor_functor: StrongMonoidalFunctor


def strictify(C: SMC) -> StrictificationResult:
    """The strict category of lists over ``C`` and the evaluation ``(x): C^str -> C``."""
    S = StrictCategory(C)
    F = StrongMonoidalFunctor(
        S, C, S.ev, lambda f: f.arrow, S.merge, S.split,
        C.identity(C.unit), C.identity(C.unit), "(x)")
    return StrictificationResult(S, F)


def strictify_supply(s: Supply, S: StrictCategory | None = None) -> Supply:
    """The supply on lists: singletons act as in ``s``, longer lists by conjugating
    the concatenated singleton actions with the grid-transposing symmetries."""
    S = S or StrictCategory(s.category)
    if S.base is not s.category:
        raise ValueError(f"{S.name} is not built over {s.category.name}")
    prop = s.prop

    def evaluator(c, mu):
        c = tuple(c)
        m, n = prop.dom(mu), prop.cod(mu)
        if len(c) == 1:
            return StrictMorphism(c * m, c * n, s.action(c[0], mu))
        k = len(c)
        gather = S.permute(c * m, grid_transpose(m, k))
        body = S.identity(())
        for x in c:
            body = S.tensor(body, StrictMorphism((x,) * m, (x,) * n, s.action(x, mu)))
        regrouped = tuple(x for x in c for _ in range(n))
        scatter = S.permute(regrouped, grid_transpose(k, n))
        return S.compose_all(gather, body, scatter)

    return Supply(prop, S, evaluator, f"{s.label}^str")


def check_strict_coherence(S: StrictCategory, objects) -> CheckReport:
    """Associators and unitors are identity morphisms; tensor of objects is concatenation."""
    report = CheckReport(f"strict-coherence/{S.name}", {"objects": len(objects)})

    def first_bad():
        for a, b, c in itertools.product(objects, repeat=3):
            f = S.associator(a, b, c)
            if not S.equal(f, S.identity(a + b + c)):
                return {"a": S.render_object(a), "b": S.render_object(b), "c": S.render_object(c)}
        return None

    w = first_bad()
    report.add("associators", "associators are identities", w is None, w)
    w = None
    for a in objects:
        if not (S.equal(S.left_unitor(a), S.identity(a)) and S.equal(S.right_unitor(a), S.identity(a))):
            w = {"a": S.render_object(a)}
            break
    report.add("unitors", "unitors are identities", w is None, w)
    w = None
    for a, b in itertools.product(objects, repeat=2):
        if S.tensor_obj(a, b) != tuple(a) + tuple(b):
            w = {"a": S.render_object(a), "b": S.render_object(b)}
            break
    report.add("concatenation", "the tensor of lists is concatenation", w is None, w)
    empty_ok = S.unit == () and S.ev(()) == S.base.unit
    report.add("empty-product", "the empty list is the unit and evaluates to the base unit",
               empty_ok, None if empty_ok else {"unit": str(S.unit)})
    return report.sorted()
