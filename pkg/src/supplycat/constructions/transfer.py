"""Moving supplies along prop functors and along strict surjections."""
from __future__ import annotations

from typing import Any, Callable, Mapping

from ..props.base import Prop, eval_prop_term
from ..props.checks import check_presentation_functor
from ..supply import Supply
from .functors import StrongMonoidalFunctor


class TransferError(ValueError):
    pass


def transfer_along_prop_functor(P: Prop, images: Mapping[str, Any], s: Supply,
                                label: str | None = None) -> Supply:
    """Precompose ``s`` (a supply of ``Q``) with the prop functor ``P -> Q`` given on generators.

    The generator images are checked against every relation of ``P``'s
    presentation first; ``TransferError`` carries the failing report.
    """
    if P.presentation is None:
        raise TransferError(f"{P.name} has no presentation to define a functor on")
    Q = s.prop
    report = check_presentation_functor(P.presentation, Q, images)
    if not report.passed:
        err = TransferError(f"generator images do not define a functor {P.name} -> {Q.name}")
        err.report = report
        raise err

    def evaluator(c, mu):
        return s.action(c, eval_prop_term(P.decompose(mu), Q, images))

    return Supply(P, s.category, evaluator, label or f"{P.name}->{s.label}")


def finset_op_to_cospan(Q: Prop) -> dict:
    """Diagonal and counit of the comonoid sent to the matching cospans."""
    return {"delta": Q.generator("delta"), "epsilon": Q.generator("epsilon")}


def self_dual_to_cospan(Q: Prop) -> dict:
    """``cup`` to ``0 -> 1 <- 2`` and ``cap`` to ``2 -> 1 <- 0``."""
    return {"cup": Q.generator("cup"), "cap": Q.generator("cap")}


Section = Callable[[Any], tuple[Any, Any, Any]]


def transfer_along_strict_surjection(F: StrongMonoidalFunctor, s: Supply, section: Section,
                                     label: str | None = None) -> Supply:
    """A supply on ``F.target`` induced by a strict, essentially surjective ``F``.

    ``section(d)`` returns ``(c, iso, iso_inv)`` with ``iso: d -> F(c)``.
    The action at ``d`` conjugates ``F(s_c(mu))`` by powers of ``iso``:
    ``t_d(mu) = iso^m ; F(s_c(mu)) ; iso_inv^n``.
    """
    if not F.strict:
        raise TransferError(f"{F} is not strict")
    if s.category is not F.source:
        raise TransferError(f"{s} does not live in the source of {F}")
    D = F.target

    def evaluator(d, mu):
        c, iso, iso_inv = section(d)
        m, n = s.prop.dom(mu), s.prop.cod(mu)
        return D.compose_all(D.tensor_power(iso, m), F(s.action(c, mu)),
                             D.tensor_power(iso_inv, n))

    return Supply(s.prop, D, evaluator, label or f"{F.name}*{s.label}")


def identity_section(F: StrongMonoidalFunctor) -> Section:
    """For functors that are the identity on objects: ``d`` lifts to itself."""
    D = F.target

    def section(d):
        if F.obj(d) != d:
            raise TransferError(f"{d} is not fixed by {F}")
        return d, D.identity(d), D.identity(d)

    return section
