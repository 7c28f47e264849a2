"""Whether a strong monoidal functor carries one supply to another."""
from __future__ import annotations

import itertools
from typing import Sequence

from ..report import CheckReport
from ..supply import Supply, _flat_morphisms, _mu_witness, coherence_morphisms, is_homomorphism
from .functors import StrongMonoidalFunctor, morphism_sample


class PropMismatch(ValueError):
    pass


def _require_same_prop(s: Supply, t: Supply):
    if s.prop is not t.prop and s.prop.name != t.prop.name:
        raise PropMismatch(f"{s} and {t} supply different props")


def _require_endpoints(F: StrongMonoidalFunctor, s: Supply, t: Supply):
    if s.category is not F.source or t.category is not F.target:
        raise ValueError(f"{F} does not run from {s.category.name} to {t.category.name}")


def preservation_failure(F: StrongMonoidalFunctor, s: Supply, t: Supply, c, mu) -> dict | None:
    """The square ``t_Fc(mu) ; phi = phi ; F(s_c(mu))``, or None when it commutes."""
    D, prop = F.target, s.prop
    m, n = prop.dom(mu), prop.cod(mu)
    lhs = D.compose(t.action(F.obj(c), mu), F.phi_power(c, n))
    rhs = D.compose(F.phi_power(c, m), F(s.action(c, mu)))
    if D.equal(lhs, rhs):
        return None
    return {"object": F.source.render_object(c), **_mu_witness(s, mu),
            "lhs": D.render(lhs), "rhs": D.render(rhs)}


def check_preserves_supply(F: StrongMonoidalFunctor, s: Supply, t: Supply, objects: Sequence,
                           arity_bound: int = 2, size_bound: int | None = 3) -> CheckReport:
    """Check the preservation square for every enumerated ``mu`` and sampled ``c``.

    Prop morphisms form the outer loop in lexicographic order of arity, so
    the witness is the first failing ``mu`` at the first object it fails on.
    """
    _require_same_prop(s, t)
    _require_endpoints(F, s, t)
    report = CheckReport(f"preserves-supply/{F.name}", {
        "arity": arity_bound, "size": size_bound, "objects": len(objects)})
    witness = None
    for mu in _flat_morphisms(s.prop, arity_bound, size_bound):
        for c in objects:
            witness = preservation_failure(F, s, t, c, mu)
            if witness:
                break
        if witness:
            break
    report.add("square", "strongators conjugate the image of the source action to the target action",
               witness is None, witness)
    return report.sorted()


def check_strongators_homomorphisms(F: StrongMonoidalFunctor, s: Supply, t: Supply,
                                    objects: Sequence, arity_bound: int = 2,
                                    size_bound: int | None = 3,
                                    source_morphisms: Sequence | None = None) -> CheckReport:
    """Strongators are ``t``-homomorphisms, and ``F`` maps ``s``-homomorphisms to ``t``-homomorphisms.

    ``source_morphisms`` (default: everything enumerated between ``objects``)
    are classified under ``s``; each homomorphism is mapped and retested.
    """
    _require_same_prop(s, t)
    _require_endpoints(F, s, t)
    C = F.source
    mus = _flat_morphisms(s.prop, arity_bound, size_bound)
    if source_morphisms is None:
        source_morphisms = morphism_sample(C, objects)
    report = CheckReport(f"strongator-homomorphisms/{F.name}", {
        "arity": arity_bound, "size": size_bound, "objects": len(objects),
        "source_morphisms": len(source_morphisms)})

    def first(items, test):
        for item in items:
            w = test(*item)
            if w is not None:
                return w
        return None

    def binary(a, b):
        res = is_homomorphism(t, F.phi(a, b), morphisms=mus)
        return None if res else {"c": C.render_object(a), "c'": C.render_object(b), **res.details}

    def unit():
        res = is_homomorphism(t, F.unit_strongator, morphisms=mus)
        return None if res else dict(res.details)

    tested = 0

    def image(f):
        nonlocal tested
        if not is_homomorphism(s, f, morphisms=mus):
            return None
        tested += 1
        res = is_homomorphism(t, F(f), morphisms=mus)
        return None if res else {"f": C.render(f), **res.details}

    w = first(itertools.product(objects, repeat=2), binary)
    report.add("strongator/binary", "binary strongators are target homomorphisms", w is None, w)
    w = unit()
    report.add("strongator/unit", "the unit strongator is a target homomorphism", w is None, w)
    w = first([(f,) for f in source_morphisms], image)
    report.add("image-of-homomorphisms", "source homomorphisms map to target homomorphisms",
               (w is None) if tested or w else None, w)
    return report.sorted()


def check_preservation_factoring(F: StrongMonoidalFunctor, s: Supply, t: Supply, objects: Sequence,
                                 arity_bound: int = 2, size_bound: int | None = 3,
                                 associator_objects: Sequence | None = None) -> CheckReport:
    """Preservation versus its two-part characterization, with the verdicts compared.

    Part one: ``F`` sends every sampled coherence isomorphism to a
    ``t``-homomorphism.  Part two: the strongator powers form a natural
    isomorphism in the prop, tested here in conjugated form
    ``phi^m ; F(s_c(mu)) ; (phi^n)^-1 = t_Fc(mu)`` through the inverse
    strongators.  Preservation must hold exactly when both parts do.
    """
    _require_same_prop(s, t)
    _require_endpoints(F, s, t)
    C, D = F.source, F.target
    mus = _flat_morphisms(s.prop, arity_bound, size_bound)
    report = CheckReport(f"preservation-factoring/{F.name}", {
        "arity": arity_bound, "size": size_bound, "objects": len(objects)})

    coherence_witness = None
    for name, f in coherence_morphisms(C, objects, associator_objects):
        res = is_homomorphism(t, F(f), morphisms=mus)
        if not res:
            coherence_witness = {"morphism": name, **res.details}
            break

    conj_witness = None
    for mu in mus:
        m, n = s.prop.dom(mu), s.prop.cod(mu)
        for c in objects:
            lhs = D.compose_all(F.phi_power(c, m), F(s.action(c, mu)), F.phi_power_inv(c, n))
            rhs = t.action(F.obj(c), mu)
            if not D.equal(lhs, rhs):
                conj_witness = {"object": C.render_object(c), **_mu_witness(s, mu),
                                "lhs": D.render(lhs), "rhs": D.render(rhs)}
                break
        if conj_witness:
            break

    direct = check_preserves_supply(F, s, t, objects, arity_bound, size_bound)
    report.add("coherence-images", "coherence isomorphisms map to target homomorphisms",
               coherence_witness is None, coherence_witness)
    report.add("natural-in-prop", "conjugating by strongator powers gives the target action",
               conj_witness is None, conj_witness)
    combined = coherence_witness is None and conj_witness is None
    agree = combined == direct.passed
    report.add("verdicts-agree", "preservation holds exactly when both parts hold", agree,
               None if agree else {"preserves": str(direct.passed), "both-parts": str(combined)})
    return report.sorted()
