"""Checking the symmetric monoidal category axioms on bounded samples.

Law variables range over ``C.sample_objects(max_leaf, d)``: ``d = max_depth - 3``
for the pentagon and ``d = max_depth - 2`` for every other law, so every
object appearing in a checked diagram has tree depth at most ``max_depth``.
Naturality squares quantify over all morphisms that ``enumerate_hom``
produces between depth-0 objects.  A law whose instance
count exceeds ``budget`` is checked on a seeded uniform sample of that many
instances instead, and its anchor says so.
"""
from __future__ import annotations

import itertools
import math
from typing import Callable, Sequence

import numpy as np

from ..report import CheckReport
from .base import SMC


def _instances(pools: Sequence[Sequence], budget: int, rng: np.random.Generator):
    total = math.prod(len(p) for p in pools)
    if total <= budget:
        return itertools.product(*pools), total, False
    idx = [rng.integers(0, len(p), budget) for p in pools]
    return (tuple(p[int(i[k])] for p, i in zip(pools, idx)) for k in range(budget)), total, True


class _SmcLawChecker:
    def __init__(self, C: SMC, max_leaf: int, max_depth: int, budget: int, seed: int):
        self.C = C
        self.max_leaf = max_leaf
        self.max_depth = max_depth
        self.budget = budget
        self.rng = np.random.default_rng(seed)
        self.report = CheckReport(f"smc-axioms/{C.name}", {
            "max_leaf": max_leaf, "max_depth": max_depth, "budget": budget, "seed": seed})
        self._objects: dict[int, list] = {}
        self._pool = None

    def objects(self, room: int) -> list:
        """Objects that still fit when ``room`` levels of tensor are built on top."""
        d = max(0, self.max_depth - room)
        if d not in self._objects:
            self._objects[d] = self.C.sample_objects(self.max_leaf, d)
        return self._objects[d]

    def morphism_pool(self) -> list:
        if self._pool is None:
            atoms = self.objects(self.max_depth)
            self._pool = [f for a in atoms for b in atoms for f in self.C.enumerate_hom(a, b)]
        return self._pool

    def law(self, law_id: str, anchor: str, pools, holds: Callable):
        """``holds(*instance)`` returns None on success or a witness dict."""
        instances, total, sampled = _instances(pools, self.budget, self.rng)
        if sampled:
            anchor = f"{anchor} [sampled {self.budget} of {total}]"
        for inst in instances:
            witness = holds(*inst)
            if witness is not None:
                self.report.add(law_id, anchor, False, witness)
                return
        self.report.add(law_id, anchor, True if total else None)

    def eq(self, f, g, **context):
        C = self.C
        if C.equal(f, g):
            return None
        w = {k: C.render_object(v) for k, v in context.items()}
        w.update(lhs=C.render(f), rhs=C.render(g))
        return w

    def run(self) -> CheckReport:
        C = self.C
        ident, comp, tens = C.identity, C.compose_all, C.tensor
        alpha, alpha_inv = C.associator, C.associator_inv
        lam, lam_inv, rho, rho_inv = C.left_unitor, C.left_unitor_inv, C.right_unitor, C.right_unitor_inv
        gamma, T, I = C.braiding, C.tensor_obj, C.unit

        def pentagon(a, b, c, d):
            lhs = comp(alpha(T(a, b), c, d), alpha(a, b, T(c, d)))
            rhs = comp(tens(alpha(a, b, c), ident(d)), alpha(a, T(b, c), d),
                       tens(ident(a), alpha(b, c, d)))
            return self.eq(lhs, rhs, a=a, b=b, c=c, d=d)

        def triangle(a, b):
            lhs = comp(alpha(a, I, b), tens(ident(a), lam(b)))
            rhs = tens(rho(a), ident(b))
            return self.eq(lhs, rhs, a=a, b=b)

        def hexagon(a, b, c):
            lhs = comp(alpha(a, b, c), gamma(a, T(b, c)), alpha(b, c, a))
            rhs = comp(tens(gamma(a, b), ident(c)), alpha(b, a, c), tens(ident(b), gamma(a, c)))
            return self.eq(lhs, rhs, a=a, b=b, c=c)

        def hexagon_inv(a, b, c):
            lhs = comp(alpha_inv(a, b, c), gamma(T(a, b), c), alpha_inv(c, a, b))
            rhs = comp(tens(ident(a), gamma(b, c)), alpha_inv(a, c, b), tens(gamma(a, c), ident(b)))
            return self.eq(lhs, rhs, a=a, b=b, c=c)

        def symmetry(a, b):
            return self.eq(comp(gamma(a, b), gamma(b, a)), ident(T(a, b)), a=a, b=b)

        def braid_unit(a):
            return self.eq(comp(gamma(a, I), lam(a)), rho(a), a=a)

        def assoc_inverse(a, b, c):
            return (self.eq(comp(alpha(a, b, c), alpha_inv(a, b, c)), ident(T(T(a, b), c)), a=a, b=b, c=c)
                    or self.eq(comp(alpha_inv(a, b, c), alpha(a, b, c)), ident(T(a, T(b, c))),
                               a=a, b=b, c=c))

        def unitor_inverse(a):
            return (self.eq(comp(lam(a), lam_inv(a)), ident(T(I, a)), a=a)
                    or self.eq(comp(lam_inv(a), lam(a)), ident(a), a=a)
                    or self.eq(comp(rho(a), rho_inv(a)), ident(T(a, I)), a=a)
                    or self.eq(comp(rho_inv(a), rho(a)), ident(a), a=a))

        def unit_unitors():
            return self.eq(lam(I), rho(I))

        self.law("pentagon", "pentagon identity for associators", [self.objects(3)] * 4, pentagon)
        self.law("triangle", "triangle identity for unitors", [self.objects(2)] * 2, triangle)
        self.law("hexagon", "hexagon identity for the braiding", [self.objects(2)] * 3, hexagon)
        self.law("hexagon-inverse", "hexagon identity with inverse associators",
                 [self.objects(2)] * 3, hexagon_inv)
        self.law("symmetry", "braiding is its own inverse", [self.objects(2)] * 2, symmetry)
        self.law("braiding-unit", "braiding with the unit then left unitor is the right unitor",
                 [self.objects(2)], braid_unit)
        self.law("associator-inverse", "associators are invertible", [self.objects(2)] * 3,
                 assoc_inverse)
        self.law("unitor-inverse", "unitors are invertible", [self.objects(2)], unitor_inverse)
        self.law("unitors-at-unit", "left and right unitors agree on the unit", [], unit_unitors)

        pool = self.morphism_pool()
        dom, cod = C.dom, C.cod

        def nat_alpha(f, g, h):
            lhs = comp(tens(tens(f, g), h), alpha(cod(f), cod(g), cod(h)))
            rhs = comp(alpha(dom(f), dom(g), dom(h)), tens(f, tens(g, h)))
            bad = self.eq(lhs, rhs)
            return bad and {**bad, "f": C.render(f), "g": C.render(g), "h": C.render(h)}

        def nat_unitors(f):
            lam_ok = self.eq(comp(tens(ident(I), f), lam(cod(f))), comp(lam(dom(f)), f))
            rho_ok = self.eq(comp(tens(f, ident(I)), rho(cod(f))), comp(rho(dom(f)), f))
            bad = lam_ok or rho_ok
            return bad and {**bad, "f": C.render(f)}

        def nat_gamma(f, g):
            lhs = comp(tens(f, g), gamma(cod(f), cod(g)))
            rhs = comp(gamma(dom(f), dom(g)), tens(g, f))
            bad = self.eq(lhs, rhs)
            return bad and {**bad, "f": C.render(f), "g": C.render(g)}

        def tensor_functorial(f, g):
            bad = self.eq(tens(ident(dom(f)), ident(dom(g))), ident(T(dom(f), dom(g))))
            if bad:
                return bad
            h, k = ident(cod(f)), ident(cod(g))
            lhs = comp(tens(f, g), tens(h, k))
            bad = self.eq(lhs, tens(comp(f, h), comp(g, k)))
            return bad and {**bad, "f": C.render(f), "g": C.render(g)}

        def interchange(f, h, g, k):
            if not (cod(f) == dom(h) and cod(g) == dom(k)):
                return None
            bad = self.eq(comp(tens(f, g), tens(h, k)), tens(comp(f, h), comp(g, k)))
            return bad and {**bad, "f": C.render(f), "g": C.render(g),
                            "h": C.render(h), "k": C.render(k)}

        def category(f):
            bad = (self.eq(comp(ident(dom(f)), f), f) or self.eq(comp(f, ident(cod(f))), f))
            return bad and {**bad, "f": C.render(f)}

        anchor_nat = "naturality of the {} over enumerated morphisms"
        self.law("naturality/associator", anchor_nat.format("associator"), [pool] * 3, nat_alpha)
        self.law("naturality/unitors", anchor_nat.format("unitors"), [pool], nat_unitors)
        self.law("naturality/braiding", anchor_nat.format("braiding"), [pool] * 2, nat_gamma)
        self.law("tensor-functorial", "tensor preserves identities and composition with identities",
                 [pool] * 2, tensor_functorial)
        composable = self._composable_pairs(pool)
        self.law("interchange", "interchange law for composable pairs",
                 [composable, composable], lambda p, q: interchange(p[0], p[1], q[0], q[1]))
        self.law("identity", "identities are units for composition", [pool], category)
        return self.report.sorted()

    def _composable_pairs(self, pool):
        by_dom: dict = {}
        for g in pool:
            by_dom.setdefault(self.C.dom(g), []).append(g)
        return [(f, g) for f in pool for g in by_dom.get(self.C.cod(f), [])]


def check_smc_axioms(C: SMC, max_leaf: int = 2, max_depth: int = 3, budget: int = 50_000,
                     seed: int = 0) -> CheckReport:
    return _SmcLawChecker(C, max_leaf, max_depth, budget, seed).run()
