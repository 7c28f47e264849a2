"""Built-in supplies on the concrete categories."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .props.builtin import Injections, finset_op, injections_op
from .props.cob import CobProp
from .props.cospan import CospanProp
from .props.base import Prop
from .smc.base import SMC, UNIT, Leaf, Tensor
from .smc.matq import MatQ, MatQMorphism, dim
from .smc.rel import FinSetCat, NestedRel, Rel, element_index, elements
from .smc.terminal import POINT, Terminal
from .supply import Supply, make_supply


def element_relation(C: SMC, dom, cod, pairs):
    """A relation in ``Rel`` or ``NestedRel`` from pairs of nested-tuple elements."""
    if isinstance(C, NestedRel):
        return C.relation(dom, cod, pairs)
    di, ci = element_index(dom), element_index(cod)
    return C.relation(dom, cod, [(di[x], ci[y]) for x, y in pairs])


def frobenius_images(C: SMC):
    """Codiagonal, initial, diagonal and terminal relations at each object."""
    def rel(dom, cod, pairs):
        return element_relation(C, dom, cod, pairs)

    return {
        "mu": lambda c: rel(Tensor(c, c), c, [((x, x), x) for x in elements(c)]),
        "eta": lambda c: rel(UNIT, c, [((), x) for x in elements(c)]),
        "delta": lambda c: rel(c, Tensor(c, c), [(x, (x, x)) for x in elements(c)]),
        "epsilon": lambda c: rel(c, UNIT, [(x, ()) for x in elements(c)]),
        "cup": lambda c: rel(UNIT, Tensor(c, c), [((), (x, x)) for x in elements(c)]),
        "cap": lambda c: rel(Tensor(c, c), UNIT, [((x, x), ()) for x in elements(c)]),
    }


def rel_hypergraph_supply(C: Rel | None = None, apex_bound: int = 3) -> Supply:
    C = C or Rel()
    return make_supply(CospanProp(apex_bound), C, frobenius_images(C), "rel-hypergraph")


def nested_rel_hypergraph_supply(C: NestedRel | None = None, apex_bound: int = 3) -> Supply:
    C = C or NestedRel()
    return make_supply(CospanProp(apex_bound), C, frobenius_images(C), "nested-rel-hypergraph")


def rel_comonoid_supply_direct(C: SMC | None = None) -> Supply:
    """Diagonal and terminal relations as a supply of the comonoid prop."""
    C = C or Rel()
    return make_supply(finset_op(), C, frobenius_images(C), "rel-comonoid-direct")


# -- matrices ------------------------------------------------------------------------

def cup_matrix(C: MatQ, c, scale=1) -> MatQMorphism:
    """``I -> c x c``: the column vector with 1 at each flattened diagonal index ``(i, i)``."""
    d = dim(c)
    q = Fraction(scale)
    num = np.zeros((d * d, 1), dtype=np.int64)
    num[[i * d + i for i in range(d)], 0] = q.numerator
    return MatQMorphism(UNIT, Tensor(c, c), num, q.denominator)


def cap_matrix(C: MatQ, c, scale=1) -> MatQMorphism:
    return C.transpose(cup_matrix(C, c, scale))


def matq_self_dual_supply(C: MatQ | None = None, circle_bound: int = 1) -> Supply:
    C = C or MatQ()
    images = {"cup": lambda c: cup_matrix(C, c), "cap": lambda c: cap_matrix(C, c)}
    return make_supply(CobProp(circle_bound), C, images, "matq-self-dual")


def matq_rescaled_supply(C: MatQ | None = None, circle_bound: int = 1) -> Supply:
    """Cup scaled by ``dim(c)`` and cap by ``1/dim(c)``; still a supply of self-duals."""
    C = C or MatQ()
    images = {"cup": lambda c: cup_matrix(C, c, dim(c)),
              "cap": lambda c: cap_matrix(C, c, Fraction(1, dim(c)))}
    return make_supply(CobProp(circle_bound), C, images, "matq-rescaled")


# -- functions -----------------------------------------------------------------------

def finsetcat_comonoid_supply(C: FinSetCat | None = None) -> Supply:
    C = C or FinSetCat()
    images = {"delta": lambda c: C.function(c, Tensor(c, c), lambda x: (x, x)),
              "epsilon": lambda c: C.function(c, UNIT, lambda x: ())}
    return make_supply(finset_op(), C, images, "finsetcat-comonoid")


def finsetcat_point_supply(C: FinSetCat | None = None) -> Supply:
    """``eta: I -> c`` picks the first element; only defined on nonempty sets."""
    C = C or FinSetCat()

    def eta(c):
        first = elements(c)
        if not first:
            raise ValueError(f"{c} is empty and has no point")
        return C.function(UNIT, c, lambda _: first[0])

    return make_supply(Injections(), C, {"eta": eta}, "finsetcat-point")


def finsetcat_copoint_supply(C: FinSetCat | None = None) -> Supply:
    C = C or FinSetCat()
    return make_supply(injections_op(), C, {"epsilon": lambda c: C.function(c, UNIT, lambda x: ())},
                       "finsetcat-copoint")


def terminal_supply(prop: Prop | None = None) -> Supply:
    """The unique supply in the terminal category."""
    prop = prop or CospanProp(3)
    return make_supply(prop, Terminal(), lambda c, g: POINT, "terminal")


# -- a corrupted fixture ---------------------------------------------------------------

BROKEN_OBJECT = Leaf(1)


def broken_supply(C: Rel | None = None) -> Supply:
    """The comonoid assignment on ``Rel`` with the counit at ``1`` replaced by the empty relation."""
    C = C or Rel()
    images = frobenius_images(C)

    def action(c, g):
        if g.name == "epsilon" and c == BROKEN_OBJECT:
            return C.relation(c, UNIT, [])
        return images[g.name](c)

    return make_supply(finset_op(), C, action, "broken-supply")
