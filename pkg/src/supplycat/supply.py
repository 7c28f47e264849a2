"""Supplies of a prop in a symmetric monoidal category, and their checks.

A supply is stored as an evaluator: ``action(c, mu)`` returns the morphism
``c^m -> c^n`` that the supply assigns to ``mu: m -> n`` at the object ``c``,
where powers are left-nested.  ``make_supply`` builds the evaluator from the
images of generators by evaluating ``prop.decompose(mu)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .finset import grid_transpose
from .props.base import EnumerationUnavailable, Prop
from .props.terms import (
    ArityError, Braid, Compose, Generator, Id, PropPresentation, PropTerm, Relation, Sum,
)
from .report import CheckReport
from .smc.base import SMC, Leaf, Tensor, power_word
from .smc.coherence import (
    block_braiding_iso, canonical_iso, power_split, sigma_interleave, sigma_unit,
)
from .smc.prop_smc import PropAsSMC

GeneratorAction = Callable[[Any, Generator], Any]


class SupplyRelationError(ValueError):
    """A generator assignment that violates a relation of the presentation."""

    def __init__(self, obj, relation: Relation, lhs: str, rhs: str):
        super().__init__(f"relation {relation} fails at object {obj}")
        self.obj = obj
        self.relation = relation
        self.lhs = lhs
        self.rhs = rhs


def power_unsplit(C: SMC, c, m: int, n: int):
    """``c^(m+n) -> c^m x c^n``, inverse to ``power_split``."""
    src = power_word(Leaf(c), m + n)
    return canonical_iso(C, src, Tensor(power_word(Leaf(c), m), power_word(Leaf(c), n)))


def evaluate_term(C: SMC, c, term: PropTerm, generator_action: GeneratorAction,
                  cache: dict | None = None):
    """Interpret a free prop term at the object ``c``.

    Braidings go to the canonical block braiding of ``c^(m+n)`` and sums to
    the tensor conjugated by the canonical splitting of powers.
    """
    cache = {} if cache is None else cache

    def go(t):
        hit = cache.get(t)
        if hit is not None:
            return hit
        if isinstance(t, Generator):
            out = generator_action(c, t)
            want = (C.power(c, t.dom), C.power(c, t.cod))
            if (C.dom(out), C.cod(out)) != want:
                raise ArityError(f"image of {t.name} at {c} is {C.dom(out)} -> {C.cod(out)}, "
                                 f"expected {want[0]} -> {want[1]}")
        elif isinstance(t, Id):
            out = C.identity(C.power(c, t.n))
        elif isinstance(t, Braid):
            out = block_braiding_iso(C, c, t.m, t.n)
        elif isinstance(t, Compose):
            out = C.compose(go(t.first), go(t.second))
        elif isinstance(t, Sum):
            l, r = t.left, t.right
            out = C.compose_all(power_unsplit(C, c, l.dom, r.dom),
                                C.tensor(go(l), go(r)),
                                power_split(C, c, l.cod, r.cod))
        else:
            raise TypeError(f"not a prop term: {t!r}")
        cache[t] = out
        return out

    return go(term)


@dataclass(eq=False)
class Supply:
    """A supply of ``prop`` in ``category``; ``evaluator(c, mu)`` gives ``s_c(mu)``."""

    prop: Prop
    category: SMC
    evaluator: Callable[[Any, Any], Any]
    label: str = "supply"
    _memo: dict = field(default_factory=dict, repr=False)

    def action(self, c, mu):
        key = (c, mu)
        try:
            return self._memo[key]
        except KeyError:
            pass
        except TypeError:  # unhashable morphism; evaluate without memo
            return self.evaluator(c, mu)
        out = self._memo[key] = self.evaluator(c, mu)
        return out

    def __repr__(self):
        return f"Supply({self.label}: {self.prop.name} in {self.category.name})"


class PresentedProp(Prop):
    """The free prop on a presentation, with terms as morphisms.

    Equality is syntactic, so this prop is only a carrier for evaluation; its
    ``enumerate_hom`` lists identities, braidings, generators and their
    single sums and composites, which is enough to exercise a supply defined
    on generators.
    """

    def __init__(self, presentation: PropPresentation):
        self.presentation = presentation
        self.name = presentation.name or "presented"

    def identity(self, n):
        return Id(n)

    def compose(self, f, g):
        return Compose(f, g)

    def monoidal_sum(self, f, g):
        return Sum(f, g)

    def braiding(self, m, n):
        return Braid(m, n)

    def decompose(self, f):
        return f

    def generator(self, name):
        return self.presentation.generators[name]

    def _elementary(self, bound: int) -> list[PropTerm]:
        out: list[PropTerm] = [Id(n) for n in range(bound + 1)]
        out += [Braid(m, n) for m in range(bound + 1) for n in range(bound + 1 - m) if m and n]
        out += [g for g in self.presentation.generators.values() if max(g.dom, g.cod) <= bound]
        return out

    def enumerate_hom(self, m, n, bound=None):
        arity = max(m, n, 2)
        base = self._elementary(arity)
        found = [t for t in base if (t.dom, t.cod) == (m, n)]
        for a, b in itertools.product(base, repeat=2):
            if (a.dom + b.dom, a.cod + b.cod) == (m, n) and not (isinstance(a, Id) and isinstance(b, Id)):
                found.append(Sum(a, b))
            if a.cod == b.dom and (a.dom, b.cod) == (m, n) and not isinstance(a, Id) \
                    and not isinstance(b, Id):
                found.append(Compose(a, b))
        return list(dict.fromkeys(found))


def _images_as_action(images) -> GeneratorAction:
    if callable(images):
        return images
    return lambda c, g: images[g.name](c)


def make_supply(prop: Prop | PropPresentation, category: SMC, generator_action,
                label: str = "supply", check_objects: Iterable | None = None) -> Supply:
    """Extend generator images to a supply.

    ``generator_action(c, g)`` returns the image of generator ``g`` at ``c``;
    a mapping from generator names to ``c -> morphism`` functions is also
    accepted.  With a presentation, every relation is evaluated at each of
    ``check_objects`` first and a violation raises ``SupplyRelationError``.
    """
    action = _images_as_action(generator_action)
    if isinstance(prop, PropPresentation):
        presentation = prop
        prop = PresentedProp(presentation)
        for c in check_objects or ():
            for rel in presentation.relations:
                lhs = evaluate_term(category, c, rel.lhs, action)
                rhs = evaluate_term(category, c, rel.rhs, action)
                if not category.equal(lhs, rhs):
                    raise SupplyRelationError(c, rel, category.render(lhs), category.render(rhs))
    C = category
    caches: dict = {}

    def evaluator(c, mu):
        return evaluate_term(C, c, prop.decompose(mu), action, caches.setdefault(c, {}))

    return Supply(prop, C, evaluator, label)


# -- enumeration -----------------------------------------------------------------

def prop_morphisms(prop: Prop, arity_bound: int, size_bound: int | None = None):
    """``(m, n, [mu...])`` in lexicographic order of ``(m, n)``."""
    if not prop.can_enumerate():
        raise EnumerationUnavailable(f"{prop.name} cannot enumerate hom-sets")
    for m in range(arity_bound + 1):
        for n in range(arity_bound + 1):
            yield m, n, prop.enumerate_hom(m, n, size_bound)


def _flat_morphisms(prop, arity_bound, size_bound):
    return [mu for _, _, homs in prop_morphisms(prop, arity_bound, size_bound) for mu in homs]


def _mu_witness(s: Supply, mu) -> dict:
    prop = s.prop
    out = {"mu": prop.render(mu), "mu_arity": f"{prop.dom(mu)}->{prop.cod(mu)}"}
    try:
        out["mu_term"] = str(prop.decompose(mu))
    except NotImplementedError:
        pass
    name = generator_name(prop, mu)
    if name is not None:
        out["mu_generator"] = name
    return out


def generator_name(prop: Prop, mu) -> str | None:
    """The presentation generator that ``mu`` equals, if any."""
    if prop.presentation is None:
        return None
    for name, g in prop.presentation.generators.items():
        if (g.dom, g.cod) != (prop.dom(mu), prop.cod(mu)):
            continue
        try:
            if prop.equal(mu, prop.generator(name)):
                return name
        except (KeyError, NotImplementedError):
            continue
    return None


# -- the supply axioms -------------------------------------------------------------

def check_supply(s: Supply, objects: Sequence, arity_bound: int = 2, size_bound: int | None = 3,
                 pair_objects: Sequence | None = None) -> CheckReport:
    """Check that ``s`` is a supply on the given objects and enumerated prop morphisms.

    Functoriality and monoidality are checked at every object in ``objects``,
    the tensor square at every pair from ``pair_objects`` (default
    ``objects``), and the unit square at the unit.
    """
    C, prop = s.category, s.prop
    pair_objects = list(objects if pair_objects is None else pair_objects)
    report = CheckReport(f"supply/{s.label}", {
        "arity": arity_bound, "size": size_bound, "objects": len(objects),
        "pair_objects": len(pair_objects)})
    by_arity = {(m, n): homs for m, n, homs in prop_morphisms(prop, arity_bound, size_bound)}
    all_mu = [mu for homs in by_arity.values() for mu in homs]
    render = C.render

    def first_failure(instances, test):
        for inst in instances:
            w = test(*inst)
            if w is not None:
                return w
        return None

    def arity(c, mu):
        f = s.action(c, mu)
        m, n = prop.dom(mu), prop.cod(mu)
        got, want = (C.dom(f), C.cod(f)), (C.power(c, m), C.power(c, n))
        if got != want:
            return {"object": C.render_object(c), **_mu_witness(s, mu),
                    "got": f"{got[0]} -> {got[1]}", "expected": f"{want[0]} -> {want[1]}"}
        return None

    def identity(c, m):
        f = s.action(c, prop.identity(m))
        if not C.equal(f, C.identity(C.power(c, m))):
            return {"object": C.render_object(c), "m": m, "image": render(f)}
        return None

    def functorial(c, mu, nu):
        lhs = s.action(c, prop.compose(mu, nu))
        rhs = C.compose(s.action(c, mu), s.action(c, nu))
        if not C.equal(lhs, rhs):
            return {"object": C.render_object(c), "mu": prop.render(mu), "nu": prop.render(nu),
                    "lhs": render(lhs), "rhs": render(rhs)}
        return None

    def monoidal(c, mu, nu):
        m1, n1, m2, n2 = prop.dom(mu), prop.cod(mu), prop.dom(nu), prop.cod(nu)
        lhs = s.action(c, prop.monoidal_sum(mu, nu))
        rhs = C.compose_all(power_unsplit(C, c, m1, m2), C.tensor(s.action(c, mu), s.action(c, nu)),
                            power_split(C, c, n1, n2))
        if not C.equal(lhs, rhs):
            return {"object": C.render_object(c), "mu": prop.render(mu), "nu": prop.render(nu),
                    "lhs": render(lhs), "rhs": render(rhs)}
        return None

    def tensor_square(c, d, mu):
        m, n = prop.dom(mu), prop.cod(mu)
        cd = C.tensor_obj(c, d)
        lhs = C.compose(C.tensor(s.action(c, mu), s.action(d, mu)), sigma_interleave(C, n, c, d))
        rhs = C.compose(sigma_interleave(C, m, c, d), s.action(cd, mu))
        if not C.equal(lhs, rhs):
            return {"c": C.render_object(c), "d": C.render_object(d), **_mu_witness(s, mu),
                    "lhs": render(lhs), "rhs": render(rhs)}
        return None

    def unit_square(mu):
        m, n = prop.dom(mu), prop.cod(mu)
        lhs = C.compose(sigma_unit(C, m), s.action(C.unit, mu))
        rhs = sigma_unit(C, n)
        if not C.equal(lhs, rhs):
            return {**_mu_witness(s, mu), "lhs": render(lhs), "rhs": render(rhs)}
        return None

    composable = [(mu, nu) for mu in all_mu for n in range(arity_bound + 1)
                  for nu in by_arity[(prop.cod(mu), n)]]
    summable = [(mu, nu) for mu in all_mu for nu in all_mu
                if prop.dom(mu) + prop.dom(nu) <= arity_bound
                and prop.cod(mu) + prop.cod(nu) <= arity_bound]
    checks = [
        ("arity", "each object's action lands on its left-nested powers",
         ((c, mu) for c in objects for mu in all_mu), arity),
        ("identity", "action preserves identities",
         ((c, m) for c in objects for m in range(arity_bound + 1)), identity),
        ("functoriality", "action preserves composition",
         ((c, mu, nu) for c in objects for mu, nu in composable), functorial),
        ("monoidality", "strongators are the canonical isomorphisms of powers",
         ((c, mu, nu) for c in objects for mu, nu in summable), monoidal),
        ("tensor-square", "action at a tensor of objects is the interleaved tensor of actions",
         ((c, d, mu) for c in pair_objects for d in pair_objects for mu in all_mu), tensor_square),
        ("unit-square", "action at the unit is the canonical isomorphism of unit powers",
         ((mu,) for mu in all_mu), unit_square),
    ]
    for cid, anchor, instances, test in checks:
        w = first_failure(instances, test)
        report.add(cid, anchor, w is None, w)
    return report.sorted()


# -- homomorphisms -----------------------------------------------------------------

@dataclass
class HomomorphismResult:
    holds: bool
    witness: Any = None          # the violating prop morphism
    details: dict | None = None

    def __bool__(self):
        return self.holds


def is_homomorphism(s: Supply, f, arity_bound: int = 2, size_bound: int | None = 3,
                    morphisms: Sequence | None = None) -> HomomorphismResult:
    """Whether ``f^m ; s_d(mu) = s_c(mu) ; f^n`` for every enumerated ``mu``.

    Prop morphisms are tried in lexicographic order of arity, so the
    reported witness is the first failure in that order.
    """
    C, prop = s.category, s.prop
    c, d = C.dom(f), C.cod(f)
    if morphisms is None:
        morphisms = _flat_morphisms(prop, arity_bound, size_bound)
    powers: dict = {}

    def power(k):
        if k not in powers:
            powers[k] = C.tensor_power(f, k)
        return powers[k]

    for mu in morphisms:
        m, n = prop.dom(mu), prop.cod(mu)
        lhs = C.compose(power(m), s.action(d, mu))
        rhs = C.compose(s.action(c, mu), power(n))
        if not C.equal(lhs, rhs):
            return HomomorphismResult(False, mu, {**_mu_witness(s, mu), "f": C.render(f),
                                                  "lhs": C.render(lhs), "rhs": C.render(rhs)})
    return HomomorphismResult(True)


def coherence_morphisms(C: SMC, objects: Sequence, associator_objects: Sequence | None = None
                        ) -> list[tuple[str, Any]]:
    """Named unitors and braidings over ``objects``, and associators over
    ``associator_objects`` (default ``objects``), with their inverses."""
    out = []
    r = C.render_object
    for a in objects:
        out += [(f"lambda({r(a)})", C.left_unitor(a)), (f"lambda_inv({r(a)})", C.left_unitor_inv(a)),
                (f"rho({r(a)})", C.right_unitor(a)), (f"rho_inv({r(a)})", C.right_unitor_inv(a))]
    for a, b in itertools.product(objects, repeat=2):
        out.append((f"gamma({r(a)},{r(b)})", C.braiding(a, b)))
    triples = objects if associator_objects is None else associator_objects
    for a, b, c in itertools.product(triples, repeat=3):
        out += [(f"alpha({r(a)},{r(b)},{r(c)})", C.associator(a, b, c)),
                (f"alpha_inv({r(a)},{r(b)},{r(c)})", C.associator_inv(a, b, c))]
    return out


def check_coherence_homomorphisms(s: Supply, objects: Sequence, arity_bound: int = 2,
                                  size_bound: int | None = 3,
                                  require_nontrivial_associator: bool = False,
                                  associator_objects: Sequence | None = None) -> CheckReport:
    """Every associator, unitor and braiding over the sample is an ``s``-homomorphism.

    With ``require_nontrivial_associator`` the report also demands that some
    tested associator is not an identity on underlying data, so that the
    check cannot pass vacuously in a category with strict associativity.
    """
    C = s.category
    report = CheckReport(f"coherence-homomorphisms/{s.label}", {
        "arity": arity_bound, "size": size_bound, "objects": len(objects),
        "associator_objects": len(objects if associator_objects is None else associator_objects)})
    morphisms = _flat_morphisms(s.prop, arity_bound, size_bound)
    families: dict[str, list] = {}
    for name, f in coherence_morphisms(C, objects, associator_objects):
        families.setdefault(name.split("(")[0], []).append((name, f))
    nontrivial = 0
    for family, members in sorted(families.items()):
        witness = None
        for name, f in members:
            if family == "alpha" and not C.is_identity_like(f):
                nontrivial += 1
            res = is_homomorphism(s, f, morphisms=morphisms)
            if not res:
                witness = {"morphism": name, **res.details}
                break
        report.add(f"homomorphism/{family}", f"{family} components are homomorphisms",
                   witness is None, witness)
    if require_nontrivial_associator:
        report.add("nontrivial-associator", "some tested associator is not an identity",
                   nontrivial > 0, None if nontrivial else {"tested": str(len(families.get("alpha", [])))})
    return report.sorted()


@dataclass
class HomomorphicSubcategory:
    homomorphisms: list
    non_homomorphisms: list
    witnesses: dict
    report: CheckReport


def homomorphic_subcategory(s: Supply, objects: Sequence, arity_bound: int = 2,
                            size_bound: int | None = 3, coherence_objects: Sequence | None = None
                            ) -> HomomorphicSubcategory:
    """Classify the enumerated morphisms between ``objects`` and check closure.

    The homomorphisms must contain the identities and the coherence
    isomorphisms over ``coherence_objects`` (default ``objects``) and be
    closed under composition and tensor on all enumerated pairs.
    """
    C = s.category
    morphisms = _flat_morphisms(s.prop, arity_bound, size_bound)
    homs, non, witnesses = [], [], {}
    for a in objects:
        for b in objects:
            for f in C.enumerate_hom(a, b):
                res = is_homomorphism(s, f, morphisms=morphisms)
                if res:
                    homs.append(f)
                else:
                    non.append(f)
                    witnesses[f] = res.witness
    report = CheckReport(f"homomorphic-subcategory/{s.label}", {
        "arity": arity_bound, "size": size_bound, "objects": len(objects),
        "homomorphisms": len(homs), "non_homomorphisms": len(non)})

    def contains(items, test):
        for item in items:
            w = test(item)
            if w is not None:
                return w
        return None

    def ident(a):
        f = C.identity(a)
        res = is_homomorphism(s, f, morphisms=morphisms)
        return None if res else {"object": C.render_object(a), **res.details}

    def coherent(item):
        name, f = item
        res = is_homomorphism(s, f, morphisms=morphisms)
        return None if res else {"morphism": name, **res.details}

    def closed_compose(pair):
        f, g = pair
        res = is_homomorphism(s, C.compose(f, g), morphisms=morphisms)
        return None if res else {"f": C.render(f), "g": C.render(g), **res.details}

    def closed_tensor(pair):
        f, g = pair
        res = is_homomorphism(s, C.tensor(f, g), morphisms=morphisms)
        return None if res else {"f": C.render(f), "g": C.render(g), **res.details}

    by_dom: dict = {}
    for g in homs:
        by_dom.setdefault(C.dom(g), []).append(g)
    composable = ((f, g) for f in homs for g in by_dom.get(C.cod(f), ()))
    coh = coherence_morphisms(C, coherence_objects if coherence_objects is not None else objects)
    for cid, anchor, items, test in [
        ("identities", "identities are homomorphisms", objects, ident),
        ("coherence", "coherence isomorphisms are homomorphisms", coh, coherent),
        ("closed/compose", "homomorphisms are closed under composition", composable, closed_compose),
        ("closed/tensor", "homomorphisms are closed under tensor",
         itertools.product(homs, repeat=2), closed_tensor),
    ]:
        w = contains(items, test)
        report.add(cid, anchor, w is None, w)
    return HomomorphicSubcategory(homs, non, witnesses, report.sorted())


# -- a prop supplies itself --------------------------------------------------------

def self_supply(prop: Prop, size_bound: int | None = None) -> Supply:
    """The supply of ``prop`` in itself: ``s_k(mu)`` is ``mu`` applied on each of ``k`` strands.

    ``s_k(mu) = t(k, m) ; (mu + ... + mu) ; t(n, k)`` with ``k`` copies of
    ``mu`` and ``t(p, q)`` the grid transpose of ``q`` blocks of ``p`` wires.
    """
    C = PropAsSMC(prop, size_bound)

    def evaluator(k, mu):
        m, n = prop.dom(mu), prop.cod(mu)
        copies = prop.identity(0)
        for _ in range(k):
            copies = prop.monoidal_sum(copies, mu)
        gather = prop.permutation(grid_transpose(m, k))    # k.m -> m.k
        scatter = prop.permutation(grid_transpose(k, n))   # n.k -> k.n
        return prop.compose(prop.compose(gather, copies), scatter)

    return Supply(prop, C, evaluator, f"self/{prop.name}")
