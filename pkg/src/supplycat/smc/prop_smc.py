"""A prop viewed as a symmetric monoidal category with trivial coherence."""
from __future__ import annotations

from ..props.base import Prop
from .base import SMC


class PropAsSMC(SMC):
    """Objects are naturals, the tensor is ``+``, and associators and unitors are identities."""

    def __init__(self, prop: Prop, size_bound: int | None = None):
        self.prop = prop
        self.size_bound = size_bound
        self.name = f"{prop.name} (as SMC)"
        self.unit = 0

    def tensor_obj(self, a, b):
        return a + b

    def atom(self, label):
        return label

    def identity(self, a):
        return self.prop.identity(a)

    def compose(self, f, g):
        return self.prop.compose(f, g)

    def tensor(self, f, g):
        return self.prop.monoidal_sum(f, g)

    def dom(self, f):
        return self.prop.dom(f)

    def cod(self, f):
        return self.prop.cod(f)

    def equal(self, f, g):
        return self.prop.equal(f, g)

    def associator(self, a, b, c):
        return self.prop.identity(a + b + c)

    associator_inv = associator

    def left_unitor(self, a):
        return self.prop.identity(a)

    left_unitor_inv = right_unitor = right_unitor_inv = left_unitor

    def braiding(self, a, b):
        return self.prop.braiding(a, b)

    def enumerate_hom(self, a, b):
        return self.prop.enumerate_hom(a, b, self.size_bound)

    def sample_objects(self, max_leaf, max_depth):
        return list(range(max_leaf + 1))

    def render(self, f):
        return self.prop.render(f)
